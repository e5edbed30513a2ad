#pragma once

// Dense integer matrices with exact arithmetic.  All entries are int64 and
// every product is overflow checked; elimination routines (rank, determinant)
// run fraction-free in 128-bit intermediates so results are exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgt {

namespace detail {

using i128 = __int128;

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact matrix arithmetic");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact matrix arithmetic");
    return r;
}

inline long long narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
    return static_cast<long long>(v);
}

} // namespace detail

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("IntMatrix: negative dimension");
        a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // All-ones matrix J.
    static IntMatrix ones(int rows, int cols) {
        IntMatrix m(rows, cols);
        for (auto& v : m.a_) v = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& operator()(int i, int j) {
        check_index(i, j);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    long long operator()(int i, int j) const {
        check_index(i, j);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        check_same_shape(o, "operator+");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = detail::narrow(detail::checked_add(a_[k], o.a_[k]), "IntMatrix::operator+");
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        check_same_shape(o, "operator-");
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = detail::narrow(detail::i128(a_[k]) - detail::i128(o.a_[k]), "IntMatrix::operator-");
        return r;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) {
                detail::i128 acc = 0;
                for (int k = 0; k < cols_; ++k)
                    acc = detail::checked_add(
                        acc, detail::checked_mul((*this)(i, k), o(k, j)));
                r(i, j) = detail::narrow(acc, "IntMatrix::operator*");
            }
        return r;
    }

    IntMatrix scaled(long long c) const {
        IntMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = detail::narrow(detail::checked_mul(a_[k], c), "IntMatrix::scaled");
        return r;
    }

    IntMatrix pow(int e) const {
        if (rows_ != cols_)
            throw std::invalid_argument("IntMatrix::pow: matrix not square");
        if (e < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
        IntMatrix r = identity(rows_);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    long long row_sum(int i) const {
        detail::i128 s = 0;
        for (int j = 0; j < cols_; ++j) s = detail::checked_add(s, (*this)(i, j));
        return detail::narrow(s, "IntMatrix::row_sum");
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("IntMatrix: index out of range");
    }

    void check_same_shape(const IntMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("IntMatrix::") + what + ": shape mismatch");
    }

    int rows_;
    int cols_;
    std::vector<long long> a_;
};

namespace detail {

// Fraction-free (Bareiss) elimination.  After step k every entry is a
// (k+1)-minor of the input, so the division by the previous pivot is exact.
inline int bareiss_rank(std::vector<i128> a, int rows, int cols) {
    auto at = [&](int i, int j) -> i128& { return a[static_cast<std::size_t>(i) * cols + j]; };
    i128 prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                at(i, j) = (checked_mul(at(r, c), at(i, j)) -
                            checked_mul(at(i, c), at(r, j))) / prev;
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

inline i128 bareiss_det(std::vector<i128> a, int n) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> i128& { return a[static_cast<std::size_t>(i) * n + j]; };
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (checked_mul(at(k, k), at(i, j)) -
                            checked_mul(at(i, k), at(k, j))) / prev;
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

inline std::vector<i128> to_i128(const IntMatrix& m) {
    std::vector<i128> a;
    a.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m(i, j));
    return a;
}

} // namespace detail

// Rank over the rationals, computed exactly.
inline int exact_rank(const IntMatrix& m) {
    return detail::bareiss_rank(detail::to_i128(m), m.rows(), m.cols());
}

// Determinant, computed exactly.  Throws on non-square input.
inline long long exact_det(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("exact_det: matrix not square");
    return detail::narrow(detail::bareiss_det(detail::to_i128(m), m.rows()), "exact_det");
}

} // namespace sgt
