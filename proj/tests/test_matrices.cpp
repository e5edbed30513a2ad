#include <catch2/catch_amalgamated.hpp>

#include "sgt/matrices.hpp"
#include "sgt/oracle.hpp"

#include "corpus.hpp"

using namespace sgt;

namespace {

SignedGraph sigma4() {
    return SignedGraph(4, GraphMode::simple,
                       {{1, 2, +1}, {2, 3, -1}, {3, 4, +1}, {1, 4, +1}, {1, 3, -1}});
}

Orientation sigma4_eta(const SignedGraph& g) {
    return Orientation(g, {{-1, +1}, {+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}});
}

SignedGraph fig1b() {
    return SignedGraph(4, GraphMode::simply_signed,
                       {{1, 2, +1}, {1, 2, -1}, {1, 3, -1}, {1, 4, +1}, {2, 3, -1}});
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("adjacency of the reference graph") {
    CHECK(adjacency(sigma4()) == from_rows({{0, 1, -1, 1}, //
                                            {1, 0, -1, 0},
                                            {-1, -1, 0, 1},
                                            {1, 0, 1, 0}}));
}

TEST_CASE("adjacency of the digon multigraph cancels") {
    CHECK(adjacency(fig1b()) == from_rows({{0, 0, -1, 1}, //
                                           {0, 0, -1, 0},
                                           {-1, -1, 0, 0},
                                           {1, 0, 0, 0}}));
    CHECK(abs_adjacency(fig1b()) == from_rows({{0, 2, 1, 1}, //
                                               {2, 0, 1, 0},
                                               {1, 1, 0, 0},
                                               {1, 0, 0, 0}}));
}

TEST_CASE("incidence of the reference graph with its fixed orientation") {
    SignedGraph g = sigma4();
    CHECK(incidence(g, sigma4_eta(g)) == from_rows({{-1, 0, 0, -1, -1}, //
                                                    {1, 1, 0, 0, 0},
                                                    {0, 1, 1, 0, -1},
                                                    {0, 0, -1, 1, 0}}));
}

TEST_CASE("kirchhoff of the reference graph") {
    SignedGraph g = sigma4();
    IntMatrix expected = from_rows({{3, -1, 1, -1}, //
                                    {-1, 2, 1, 0},
                                    {1, 1, 3, -1},
                                    {-1, 0, -1, 2}});
    CHECK(kirchhoff(g) == expected);
    IntMatrix h = incidence(g, sigma4_eta(g));
    CHECK(h * h.transpose() == expected);
}

TEST_CASE("incidence columns encode the sign rule") {
    for (const SignedGraph& g : corpus::all_signed_simple(3)) {
        for (std::uint64_t seed : {0ull, 7ull}) {
            Orientation o = seed == 0 ? default_orientation(g) : corpus::random_orientation(g, seed);
            IntMatrix h = incidence(g, o);
            for (const Edge& e : g.edges()) {
                long long prod = h(e.u - 1, e.id - 1) * h(e.v - 1, e.id - 1);
                CHECK(prod == -e.sign);
            }
            CHECK(kirchhoff(g) == h * h.transpose());
        }
    }
}

TEST_CASE("kirchhoff equals incidence gram also with digons") {
    SignedGraph g = fig1b();
    Orientation o = default_orientation(g);
    CHECK(kirchhoff(g) == incidence(g, o) * incidence(g, o).transpose());
    CHECK(kirchhoff(g)(0, 0) == 4); // degree counts both digon edges
}

TEST_CASE("seidel matrix is the adjacency of the signed complete graph") {
    for (const Graph& gamma : corpus::all_graphs(4))
        CHECK(seidel(gamma) == adjacency(signed_complete(gamma)));
    CHECK(seidel(corpus::cycle(3)) == from_rows({{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}}));
    CHECK(seidel(Graph(2, {})) == from_rows({{0, 1}, {1, 0}}));
}

TEST_CASE("degrees and regularity") {
    SignedGraph g = fig1b();
    DegreeVector d = degrees(g);
    CHECK(d[0].underlying == 4);
    CHECK(d[0].positive == 2);
    CHECK(d[0].negative == 2);
    CHECK(d[0].net == 0);
    CHECK(d[3].underlying == 1);
    CHECK(degree_matrix(g)(0, 0) == 4);
    CHECK_FALSE(is_regular(g).has_value());

    auto r = is_regular(all_negative(corpus::cycle(4)));
    REQUIRE(r.has_value());
    CHECK(r->first == 0);
    CHECK(r->second == 2);
}

TEST_CASE("ar symbol algebra") {
    // Addition is set union.
    CHECK(ar_add(ArSymbol::o, ArSymbol::p) == ArSymbol::p);
    CHECK(ar_add(ArSymbol::p, ArSymbol::n) == ArSymbol::a);
    CHECK(ar_add(ArSymbol::a, ArSymbol::n) == ArSymbol::a);
    CHECK(ar_add(ArSymbol::o, ArSymbol::o) == ArSymbol::o);
    // Multiplication is elementwise sign product.
    CHECK(ar_mul(ArSymbol::o, ArSymbol::a) == ArSymbol::o);
    CHECK(ar_mul(ArSymbol::p, ArSymbol::p) == ArSymbol::p);
    CHECK(ar_mul(ArSymbol::p, ArSymbol::n) == ArSymbol::n);
    CHECK(ar_mul(ArSymbol::n, ArSymbol::n) == ArSymbol::p);
    CHECK(ar_mul(ArSymbol::a, ArSymbol::p) == ArSymbol::a);
    CHECK(ar_mul(ArSymbol::a, ArSymbol::a) == ArSymbol::a);
    CHECK(ar_char(ArSymbol::o) == 'o');
    CHECK(ar_char(ArSymbol::a) == 'a');
}

TEST_CASE("ar matrix entries") {
    ArMatrix r = ar_matrix(fig1b());
    CHECK(r(0, 0) == ArSymbol::p); // diagonal: the empty walk
    CHECK(r(0, 1) == ArSymbol::a); // digon
    CHECK(r(0, 2) == ArSymbol::n);
    CHECK(r(0, 3) == ArSymbol::p);
    CHECK(r(1, 3) == ArSymbol::o);
}

TEST_CASE("ar walk existence agrees with brute force walk counts") {
    std::vector<SignedGraph> gs = corpus::all_signed_simple(3);
    gs.push_back(fig1b());
    for (const SignedGraph& g : gs)
        for (int l = 0; l <= 4; ++l)
            for (int i = 1; i <= g.n(); ++i)
                for (int j = 1; j <= g.n(); ++j) {
                    WalkCounts w = count_signed_walks(g, i, j, l);
                    CHECK(ar_walk_exists(g, i, j, l, +1) == (w.plus > 0));
                    CHECK(ar_walk_exists(g, i, j, l, -1) == (w.minus > 0));
                }
}

TEST_CASE("ar walk argument validation") {
    SignedGraph g = fig1b();
    CHECK_THROWS_AS(ar_walk_exists(g, 0, 1, 1, +1), std::out_of_range);
    CHECK_THROWS_AS(ar_walk_exists(g, 1, 1, -1, +1), std::invalid_argument);
    CHECK_THROWS_AS(ar_walk_exists(g, 1, 1, 1, 2), std::invalid_argument);
}

namespace {

// Laplace expansion along the first row, for cross checking exact_det.
long long laplace_det(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        long long term = m(0, j) * laplace_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

TEST_CASE("exact determinant and rank on small random matrices") {
    std::uint64_t state = 42;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(corpus::splitmix64(state) % 5);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = static_cast<long long>(corpus::splitmix64(state) % 11) - 5;
        long long det = laplace_det(m);
        CHECK(exact_det(m) == det);
        if (det != 0)
            CHECK(exact_rank(m) == n);
        else
            CHECK(exact_rank(m) < n);
    }
}

TEST_CASE("exact rank pinned values") {
    CHECK(exact_rank(IntMatrix(3, 5)) == 0);
    CHECK(exact_rank(IntMatrix::identity(4)) == 4);
    CHECK(exact_rank(IntMatrix::ones(3, 3)) == 1);
    CHECK(exact_det(IntMatrix(0, 0)) == 1);
    CHECK(exact_det(kirchhoff(all_positive(corpus::complete(4)))) == 0);
    CHECK_THROWS_AS(exact_det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("integer overflow is detected") {
    IntMatrix big(1, 1);
    big(0, 0) = INT64_MAX;
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big.scaled(2), std::overflow_error);
}
