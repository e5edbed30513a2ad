#include <catch2/catch_amalgamated.hpp>

#include "sgt/balance.hpp"
#include "sgt/oracle.hpp"

#include "corpus.hpp"

using namespace sgt;

namespace {

SignedGraph sigma4() {
    return SignedGraph(4, GraphMode::simple,
                       {{1, 2, +1}, {2, 3, -1}, {3, 4, +1}, {1, 4, +1}, {1, 3, -1}});
}

} // namespace

TEST_CASE("circles of the reference graph") {
    std::vector<Circle> cs = enumerate_circles(sigma4());
    REQUIRE(cs.size() == 3);
    CHECK(detail::sorted_copy(cs[0].edges) == std::vector<int>{1, 2, 5});
    CHECK(cs[0].sign == 1);
    CHECK(detail::sorted_copy(cs[1].edges) == std::vector<int>{3, 4, 5});
    CHECK(cs[1].sign == -1);
    CHECK(detail::sorted_copy(cs[2].edges) == std::vector<int>{1, 2, 3, 4});
    CHECK(cs[2].sign == -1);
    CHECK(cs[0].vertices.front() == 1);
}

TEST_CASE("circle counts of complete graphs") {
    CHECK(enumerate_circles(all_positive(corpus::complete(4))).size() == 7);
    CHECK(enumerate_circles(all_positive(corpus::complete(5))).size() == 37);
}

TEST_CASE("digons are circles of length two") {
    SignedGraph d(2, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}});
    std::vector<Circle> cs = enumerate_circles(d);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].edges.size() == 2);
    CHECK(cs[0].sign == -1);
}

TEST_CASE("disconnected circle sets are not circles") {
    SignedGraph u = disjoint_union(all_positive(corpus::cycle(3)), all_positive(corpus::cycle(3)));
    CHECK(enumerate_circles(u).size() == 2);
}

TEST_CASE("the two circle enumerators agree") {
    std::vector<SignedGraph> gs = corpus::all_signed_simple(4);
    gs.push_back(SignedGraph(4, GraphMode::simply_signed,
                             {{1, 2, +1}, {1, 2, -1}, {1, 3, -1}, {1, 4, +1}, {2, 3, -1}}));
    gs.push_back(all_positive(corpus::complete(5)));
    for (const SignedGraph& g : gs) {
        std::vector<Circle> a = detail::circles_by_paths(g);
        std::vector<Circle> b = detail::circles_by_fundamental(g);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(detail::sorted_copy(a[i].edges) == detail::sorted_copy(b[i].edges));
            CHECK(a[i].sign == b[i].sign);
        }
    }
}

TEST_CASE("circle enumeration guard") {
    SignedGraph big = all_positive(corpus::cycle(9));
    CHECK_THROWS_AS(enumerate_circles(big), std::invalid_argument);
}

TEST_CASE("walk counts on the reference graph") {
    SignedGraph g = sigma4();
    WalkCounts w = count_signed_walks(g, 1, 1, 2);
    CHECK(w.plus == 3);
    CHECK(w.minus == 0);
    w = count_signed_walks(g, 1, 3, 2);
    CHECK(w.plus == 1);
    CHECK(w.minus == 1);
    w = count_signed_walks(g, 1, 2, 0);
    CHECK(w.plus == 0);
    CHECK(w.minus == 0);
    w = count_signed_walks(g, 1, 1, 0);
    CHECK(w.plus == 1);
    CHECK_THROWS_AS(count_signed_walks(g, 1, 1, 7), std::invalid_argument);
    CHECK_THROWS_AS(count_signed_walks(g, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("unbalanced pseudoforests of small cycles") {
    CHECK(enumerate_unbalanced_pseudoforests(all_negative(corpus::cycle(3))).size() == 1);
    CHECK(enumerate_unbalanced_pseudoforests(all_positive(corpus::cycle(3))).empty());
    auto pfs = enumerate_unbalanced_pseudoforests(all_negative(corpus::cycle(3)));
    REQUIRE(pfs.size() == 1);
    REQUIRE(pfs[0].components.size() == 1);
    CHECK(pfs[0].components[0].circle_sign == -1);
    CHECK(pfs[0].components[0].circle_edges.size() == 3);
    CHECK_THROWS_AS(enumerate_unbalanced_pseudoforests(all_positive(corpus::cycle(8))),
                    std::invalid_argument);
}

TEST_CASE("pseudoforests of the reference graph") {
    auto pfs = enumerate_unbalanced_pseudoforests(sigma4());
    // Dropping e3 or e4 leaves the positive triangle; the other three edge
    // subsets each carry one negative circle.
    CHECK(pfs.size() == 3);
}

TEST_CASE("matrix tree identity") {
    Report r = matrix_tree_check(sigma4());
    REQUIRE(r.items.size() == 1);
    CHECK(r.ok());
    CHECK(exact_det(kirchhoff(sigma4())) == 12);
    for (const SignedGraph& g : corpus::all_signed_simple(3)) CHECK(matrix_tree_check(g).ok());
    SignedGraph fig1b(4, GraphMode::simply_signed,
                      {{1, 2, +1}, {1, 2, -1}, {1, 3, -1}, {1, 4, +1}, {2, 3, -1}});
    CHECK(matrix_tree_check(fig1b).ok());
    // Balanced graphs have singular Kirchhoff and no unbalanced pseudoforest.
    CHECK(matrix_tree_check(all_positive(corpus::complete(4))).ok());
    CHECK(exact_det(kirchhoff(all_positive(corpus::complete(4)))) == 0);
}

TEST_CASE("theta subgraph parity") {
    // Two vertices joined by three paths, over every signature.
    std::vector<std::pair<int, int>> ends{{1, 2}, {1, 3}, {3, 2}, {1, 4}, {4, 2}};
    for (int bits = 0; bits < 32; ++bits) {
        std::vector<EdgeSpec> es;
        for (int i = 0; i < 5; ++i)
            es.push_back({ends[i].first, ends[i].second, (bits >> i) & 1 ? -1 : 1});
        Report r = verify_theta_parity(SignedGraph(4, GraphMode::simple, es));
        CHECK(r.ok());
    }
    CHECK(verify_theta_parity(sigma4()).ok());
    CHECK_THROWS_AS(verify_theta_parity(all_positive(corpus::cycle(8))), std::invalid_argument);
}

TEST_CASE("enumerate switchings guard") {
    SignedGraph big(13, GraphMode::simple, {});
    CHECK_THROWS_AS(enumerate_switchings(big), std::invalid_argument);
}
