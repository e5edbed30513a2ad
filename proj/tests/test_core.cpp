#include <catch2/catch_amalgamated.hpp>

#include "sgt/signed_graph.hpp"

#include "corpus.hpp"

using namespace sgt;

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simple, {{1, 1, +1}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simple, {{1, 3, +1}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simple, {{0, 2, +1}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simple, {{1, 2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(-1, GraphMode::simple, {}), std::invalid_argument);

    // Parallel edges: never in simple mode, only opposite-sign pairs in
    // simply signed mode.
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simple, {{1, 2, +1}, {2, 1, -1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SignedGraph(2, GraphMode::simply_signed, {{1, 2, +1}, {2, 1, +1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        SignedGraph(2, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}, {2, 1, -1}}),
        std::invalid_argument);
    CHECK_NOTHROW(SignedGraph(2, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}}));
}

TEST_CASE("accessors") {
    SignedGraph g(4, GraphMode::simply_signed,
                  {{1, 2, +1}, {1, 2, -1}, {1, 3, -1}, {3, 4, +1}});
    CHECK(g.n() == 4);
    CHECK(g.m() == 4);
    CHECK(g.edge(3).u == 1);
    CHECK(g.edge(3).v == 3);
    CHECK(g.sign(3) == -1);
    CHECK(g.incident(1) == std::vector<int>{1, 2, 3});
    CHECK(g.incident(4) == std::vector<int>{4});
    CHECK(g.incident_to(2, 1));
    CHECK_FALSE(g.incident_to(4, 1));
    CHECK(g.other_end(4, 3) == 4);
    CHECK(g.other_end(4, 4) == 3);
    CHECK(g.underlying_degree(1) == 3);
    CHECK(g.multiplicity(1, 2) == 2);
    CHECK(g.multiplicity(2, 1) == 2);
    CHECK(g.multiplicity(1, 3) == 1);
    CHECK(g.multiplicity(2, 4) == 0);
    CHECK(g.edge_ids_between(1, 2) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(g.edge(5), std::out_of_range);
    CHECK_THROWS_AS(g.sign(0), std::out_of_range);
}

TEST_CASE("underlying graph collapses digons") {
    SignedGraph g(3, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}, {2, 3, -1}});
    Graph u = underlying(g);
    CHECK(u.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(u.adjacent(1, 2));
    CHECK(u.adjacent(3, 2));
    CHECK_FALSE(u.adjacent(1, 3));
}

TEST_CASE("constant sign and signed complete constructions") {
    Graph c3 = corpus::cycle(3);
    SignedGraph plus = all_positive(c3);
    SignedGraph minus = all_negative(c3);
    for (const Edge& e : plus.edges()) CHECK(e.sign == +1);
    for (const Edge& e : minus.edges()) CHECK(e.sign == -1);

    // K_Gamma: edges of Gamma negative, the rest positive.
    SignedGraph kg = signed_complete(Graph(4, {{1, 2}}));
    CHECK(kg.m() == 6);
    for (const Edge& e : kg.edges()) {
        bool in_gamma = (e.u == 1 && e.v == 2) || (e.u == 2 && e.v == 1);
        CHECK(e.sign == (in_gamma ? -1 : +1));
    }
}

TEST_CASE("switching acts by theta(u) sigma theta(v)") {
    SignedGraph g(4, GraphMode::simple, {{1, 2, +1}, {2, 3, -1}, {3, 4, +1}, {1, 4, +1}});
    SwitchingFunction theta = SwitchingFunction::from_set(4, {2});
    SignedGraph s = switch_fn(g, theta);
    CHECK(s.sign(1) == -1);
    CHECK(s.sign(2) == +1);
    CHECK(s.sign(3) == +1);
    CHECK(s.sign(4) == +1);

    // Involution and the trivial switching.
    CHECK(switch_fn(s, theta) == g);
    CHECK(switch_fn(g, SwitchingFunction::all_plus(4)) == g);

    // Switching the whole vertex set changes nothing.
    CHECK(switch_set(g, {1, 2, 3, 4}) == g);

    CHECK_THROWS_AS(switch_fn(g, SwitchingFunction::all_plus(3)), std::domain_error);
    CHECK_THROWS_AS(SwitchingFunction::from_set(4, {5}), std::out_of_range);
}

TEST_CASE("switching functions compose pointwise") {
    SwitchingFunction a = SwitchingFunction::from_set(3, {1});
    SwitchingFunction b = SwitchingFunction::from_set(3, {1, 3});
    SwitchingFunction c = a * b;
    CHECK(c(1) == +1);
    CHECK(c(2) == +1);
    CHECK(c(3) == -1);
}

TEST_CASE("negate flips every sign") {
    SignedGraph g(3, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}, {2, 3, -1}});
    SignedGraph neg = negate(g);
    for (const Edge& e : g.edges()) CHECK(neg.sign(e.id) == -e.sign);
}

TEST_CASE("orientation invariant and default orientation") {
    SignedGraph g(3, GraphMode::simple, {{1, 2, +1}, {2, 3, -1}});
    Orientation o = default_orientation(g);
    for (const Edge& e : g.edges()) CHECK(-o.eta(e.u, e.id) * o.eta(e.v, e.id) == e.sign);
    CHECK(o.eta(1, 1) == -1);
    CHECK(o.eta(2, 1) == +1);
    CHECK(o.eta(2, 2) == -1);
    CHECK(o.eta(3, 2) == -1);
    CHECK_THROWS_AS(o.eta(3, 1), std::invalid_argument);

    // A bidirection violating the sign rule is rejected.
    CHECK_THROWS_AS(Orientation(g, {{-1, +1}, {-1, +1}}), std::invalid_argument);
}

TEST_CASE("reorienting an edge keeps the signed graph") {
    SignedGraph g(3, GraphMode::simple, {{1, 2, +1}, {2, 3, -1}});
    Orientation o = default_orientation(g);
    Orientation r = reorient_edge(o, 2);
    CHECK(r.eta(2, 2) == -o.eta(2, 2));
    CHECK(r.eta(3, 2) == -o.eta(3, 2));
    CHECK(r.eta(1, 1) == o.eta(1, 1));
    CHECK(r.consistent_with(g));
}

TEST_CASE("switching an orientation matches switching the graph") {
    for (const SignedGraph& g : corpus::all_signed_simple(3)) {
        Orientation o = default_orientation(g);
        for (std::uint32_t mask = 0; mask < 8; ++mask) {
            std::vector<int> flip;
            for (int v = 1; v <= 3; ++v)
                if (mask >> (v - 1) & 1) flip.push_back(v);
            SwitchingFunction theta = SwitchingFunction::from_set(3, flip);
            Orientation so = switch_orientation(o, theta);
            SignedGraph sg = switch_fn(g, theta);
            CHECK(so.consistent_with(sg));
            for (const Edge& e : g.edges()) {
                CHECK(so.eta(e.u, e.id) == theta(e.u) * o.eta(e.u, e.id));
                CHECK(so.eta(e.v, e.id) == theta(e.v) * o.eta(e.v, e.id));
            }
        }
    }
}

TEST_CASE("components and induced subgraphs") {
    SignedGraph g(5, GraphMode::simple, {{1, 2, +1}, {2, 3, -1}, {4, 5, -1}});
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5});
    CHECK(component_count(g) == 2);

    SignedGraph sub = induced_subgraph(g, {2, 3, 4});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 1);
    CHECK(sub.edge(1).u == 1); // relabelled: 2 -> 1, 3 -> 2
    CHECK(sub.edge(1).v == 2);
    CHECK(sub.sign(1) == -1);
    CHECK_THROWS_AS(induced_subgraph(g, {0}), std::out_of_range);
}

TEST_CASE("edge deletion renumbers") {
    SignedGraph g(3, GraphMode::simple, {{1, 2, +1}, {2, 3, -1}, {1, 3, +1}});
    SignedGraph d = delete_edge(g, 2);
    CHECK(d.m() == 2);
    CHECK(d.edge(1).u == 1);
    CHECK(d.edge(2).u == 1);
    CHECK(d.edge(2).v == 3);
    CHECK(d.sign(2) == +1);
}

TEST_CASE("disjoint union offsets the second operand") {
    SignedGraph a(2, GraphMode::simple, {{1, 2, -1}});
    SignedGraph b(3, GraphMode::simple, {{1, 3, +1}});
    SignedGraph u = disjoint_union(a, b);
    CHECK(u.n() == 5);
    CHECK(u.m() == 2);
    CHECK(u.edge(2).u == 3);
    CHECK(u.edge(2).v == 5);
    CHECK(component_count(u) == 3);
}
