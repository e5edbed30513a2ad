#pragma once

// Matrices attached to a signed graph: adjacency (parallel edges cancel),
// Seidel adjacency, incidence under a bidirection, Kirchhoff, degrees, and
// the four symbol walk matrix over {o, p, n, a}.

#include <optional>
#include <utility>

#include "sgt/int_matrix.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

// A(Sigma): entry (u,v) is the sum of signs of all uv edges, so a digon
// contributes zero.
inline IntMatrix adjacency(const SignedGraph& g) {
    IntMatrix a(g.n(), g.n());
    for (const Edge& e : g.edges()) {
        a(e.u - 1, e.v - 1) += e.sign;
        a(e.v - 1, e.u - 1) += e.sign;
    }
    return a;
}

// A(|Sigma|): adjacency of the underlying multigraph, so a digon
// contributes 2.
inline IntMatrix abs_adjacency(const SignedGraph& g) {
    IntMatrix a(g.n(), g.n());
    for (const Edge& e : g.edges()) {
        a(e.u - 1, e.v - 1) += 1;
        a(e.v - 1, e.u - 1) += 1;
    }
    return a;
}

// Seidel adjacency of an unsigned graph: -1 adjacent, +1 non-adjacent,
// 0 diagonal.  Equals adjacency(signed_complete(g)).
inline IntMatrix seidel(const Graph& g) {
    IntMatrix s(g.n(), g.n());
    for (int u = 1; u <= g.n(); ++u)
        for (int v = 1; v <= g.n(); ++v) {
            if (u == v) continue;
            s(u - 1, v - 1) = g.adjacent(u, v) ? -1 : 1;
        }
    return s;
}

// Incidence matrix H(Sigma, eta): column e has eta(u,e) in row u and
// eta(v,e) in row v; the two nonzeros multiply to -sigma(e).
inline IntMatrix incidence(const SignedGraph& g, const Orientation& o) {
    if (!o.consistent_with(g))
        throw std::invalid_argument("incidence: orientation does not belong to this graph");
    IntMatrix h(g.n(), g.m());
    for (const Edge& e : g.edges()) {
        h(e.u - 1, e.id - 1) = o.ends(e.id)[0];
        h(e.v - 1, e.id - 1) = o.ends(e.id)[1];
    }
    return h;
}

struct VertexDegrees {
    int underlying;
    int positive;
    int negative;
    int net;

    bool operator==(const VertexDegrees&) const = default;
};

using DegreeVector = std::vector<VertexDegrees>;

inline DegreeVector degrees(const SignedGraph& g) {
    DegreeVector d(static_cast<std::size_t>(g.n()), VertexDegrees{0, 0, 0, 0});
    for (const Edge& e : g.edges())
        for (int v : {e.u, e.v}) {
            auto& dv = d[v - 1];
            ++dv.underlying;
            if (e.sign > 0)
                ++dv.positive;
            else
                ++dv.negative;
            dv.net += e.sign;
        }
    return d;
}

// D(|Sigma|): diagonal matrix of underlying degrees.
inline IntMatrix degree_matrix(const SignedGraph& g) {
    IntMatrix d(g.n(), g.n());
    DegreeVector dv = degrees(g);
    for (int v = 1; v <= g.n(); ++v) d(v - 1, v - 1) = dv[v - 1].underlying;
    return d;
}

// K(Sigma) = D(|Sigma|) - A(Sigma); equals H H^T for any bidirection.
inline IntMatrix kirchhoff(const SignedGraph& g) {
    return degree_matrix(g) - adjacency(g);
}

// (k+, k-) when every vertex has the same positive and negative degree.
inline std::optional<std::pair<int, int>> is_regular(const SignedGraph& g) {
    if (g.n() == 0) return std::make_pair(0, 0);
    DegreeVector d = degrees(g);
    for (const auto& dv : d)
        if (dv.positive != d[0].positive || dv.negative != d[0].negative)
            return std::nullopt;
    return std::make_pair(d[0].positive, d[0].negative);
}

// Walk algebra on subsets of {+,-}: o = {}, p = {+}, n = {-}, a = {+,-}.
// Addition is union; multiplication is the elementwise sign product.
enum class ArSymbol : unsigned char { o = 0, p = 1, n = 2, a = 3 };

inline ArSymbol ar_add(ArSymbol x, ArSymbol y) {
    return static_cast<ArSymbol>(static_cast<unsigned>(x) | static_cast<unsigned>(y));
}

inline ArSymbol ar_mul(ArSymbol x, ArSymbol y) {
    unsigned a = static_cast<unsigned>(x), b = static_cast<unsigned>(y);
    unsigned plus = ((a & 1u) && (b & 1u)) || ((a & 2u) && (b & 2u));
    unsigned minus = ((a & 1u) && (b & 2u)) || ((a & 2u) && (b & 1u));
    return static_cast<ArSymbol>(plus | (minus << 1));
}

inline char ar_char(ArSymbol x) {
    switch (x) {
        case ArSymbol::o: return 'o';
        case ArSymbol::p: return 'p';
        case ArSymbol::n: return 'n';
        default: return 'a';
    }
}

class ArMatrix {
public:
    explicit ArMatrix(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("ArMatrix: negative dimension");
        a_.assign(static_cast<std::size_t>(n) * n, ArSymbol::o);
    }

    int n() const { return n_; }

    ArSymbol& operator()(int i, int j) {
        check_index(i, j);
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    ArSymbol operator()(int i, int j) const {
        check_index(i, j);
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool operator==(const ArMatrix&) const = default;

    ArMatrix operator*(const ArMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ArMatrix::operator*: shape mismatch");
        ArMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                ArSymbol acc = ArSymbol::o;
                for (int k = 0; k < n_; ++k)
                    acc = ar_add(acc, ar_mul((*this)(i, k), o(k, j)));
                r(i, j) = acc;
            }
        return r;
    }

    static ArMatrix identity(int n) {
        ArMatrix r(n);
        for (int i = 0; i < n; ++i) r(i, i) = ArSymbol::p;
        return r;
    }

    ArMatrix pow(int e) const {
        if (e < 0) throw std::invalid_argument("ArMatrix::pow: negative exponent");
        ArMatrix r = identity(n_);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("ArMatrix: index out of range");
    }

    int n_;
    std::vector<ArSymbol> a_;
};

// R(Sigma): p on the diagonal; off diagonal p, n or a by the signs present
// between the two vertices, o when non-adjacent.
inline ArMatrix ar_matrix(const SignedGraph& g) {
    ArMatrix r(g.n());
    for (int v = 1; v <= g.n(); ++v) r(v - 1, v - 1) = ArSymbol::p;
    for (const Edge& e : g.edges()) {
        ArSymbol s = e.sign > 0 ? ArSymbol::p : ArSymbol::n;
        r(e.u - 1, e.v - 1) = ar_add(r(e.u - 1, e.v - 1), s);
        r(e.v - 1, e.u - 1) = r(e.u - 1, e.v - 1);
    }
    return r;
}

// Does a walk of length l and the given sign run from i to j?  Uses R with
// the diagonal reset to o, whose semiring powers track walk signs exactly
// like powers of the adjacency matrix track walk counts.
inline bool ar_walk_exists(const SignedGraph& g, int i, int j, int l, int sign) {
    g.check_vertex(i);
    g.check_vertex(j);
    if (l < 0) throw std::invalid_argument("ar_walk_exists: negative length");
    check_sign(sign, "ar_walk_exists");
    ArMatrix m = ar_matrix(g);
    for (int v = 0; v < m.n(); ++v) m(v, v) = ArSymbol::o;
    ArSymbol entry = m.pow(l)(i - 1, j - 1);
    unsigned bits = static_cast<unsigned>(entry);
    return sign > 0 ? (bits & 1u) != 0 : (bits & 2u) != 0;
}

} // namespace sgt
