#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "sgt/vsr.hpp"

#include "corpus.hpp"

using namespace sgt;

namespace {

void check_params(const std::optional<VsrParameters>& got, long long t, long long k, long long p,
                  long long rho0, const std::string& tag) {
    REQUIRE(got.has_value());
    CHECK(got->t == t);
    CHECK(got->k == k);
    CHECK(got->p == p);
    CHECK(got->rho0 == rho0);
    CHECK(got->case_tag == tag);
}

} // namespace

TEST_CASE("five cycles are very strongly regular") {
    SignedGraph plus = all_positive(corpus::cycle(5));
    auto par = check_vsr(plus);
    check_params(par, 0, 2, 1, 2, "general");
    CHECK_FALSE(par->degenerate_p);
    CHECK(vsr_combinatorial_check(plus, *par).ok());

    SignedGraph minus = all_negative(corpus::cycle(5));
    auto npar = check_vsr(minus);
    check_params(npar, 0, 2, 1, -2, "general");
    CHECK(vsr_combinatorial_check(minus, *npar).ok());
}

TEST_CASE("non examples") {
    CHECK_FALSE(check_vsr(all_positive(corpus::path(3))).has_value());
    SignedGraph oneneg(4, GraphMode::simple,
                       {{1, 2, +1}, {2, 3, +1}, {3, 4, +1}, {1, 4, -1}});
    CHECK_FALSE(check_vsr(oneneg).has_value());
    CHECK_FALSE(check_vsr(signed_complete(corpus::cycle(5))).has_value());
    SignedGraph digon(2, GraphMode::simply_signed, {{1, 2, +1}, {1, 2, -1}});
    CHECK_THROWS_AS(check_vsr(digon), std::invalid_argument);
}

TEST_CASE("four cycles and complete graphs") {
    check_params(check_vsr(all_positive(corpus::cycle(4))), 0, 2, 2, 2, "general");

    auto k4 = check_vsr(all_positive(corpus::complete(4)));
    check_params(k4, 2, 3, 0, 3, "homogeneous-SRG");
    CHECK(k4->degenerate_p);
    check_params(check_vsr(all_negative(corpus::complete(4))), -2, 3, 0, -3, "homogeneous-SRG");

    // A four cycle with two opposite negative edges is net regular.
    SignedGraph opp(4, GraphMode::simple, {{1, 2, -1}, {2, 3, +1}, {3, 4, -1}, {1, 4, +1}});
    check_params(check_vsr(opp), 0, 2, -2, 0, "general");
}

TEST_CASE("the signed complete graph of a perfect matching") {
    auto par = check_vsr(signed_complete(Graph(4, {{1, 2}, {3, 4}})));
    check_params(par, -2, 3, 0, 1, "p0");
    CHECK(par->degenerate_p);
    CHECK(vsr_combinatorial_check(signed_complete(Graph(4, {{1, 2}, {3, 4}})), *par).ok());
}

TEST_CASE("combinatorial check reports the first bad pair") {
    SignedGraph plus = all_positive(corpus::cycle(5));
    VsrParameters wrong = *check_vsr(plus);
    wrong.p = 5;
    Report rep = vsr_combinatorial_check(plus, wrong);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.items.size() == 2);
    CHECK(rep.items[0].passed);
    CHECK_FALSE(rep.items[1].passed);
    CHECK(rep.items[1].detail.find("pair") != std::string::npos);
}

TEST_CASE("weighing matrices") {
    CHECK(is_weighing_matrix(IntMatrix::identity(3)) == 1);
    CHECK(is_weighing_matrix(IntMatrix(2, 2)) == 0);
    CHECK(is_weighing_matrix(IntMatrix(0, 0)) == 1);
    IntMatrix w(2, 2);
    w(0, 0) = 1;
    w(0, 1) = 1;
    w(1, 0) = 1;
    w(1, 1) = -1;
    CHECK(is_weighing_matrix(w) == 2);
    w(1, 0) = 0;
    CHECK_FALSE(is_weighing_matrix(w).has_value());
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    CHECK_FALSE(is_weighing_matrix(two).has_value());
}

TEST_CASE("vsr with all positive signs is classical strong regularity") {
    CHECK(check_srg_equivalence(corpus::cycle(5)).ok());
    CHECK(check_srg_equivalence(corpus::path(4)).ok());
    CHECK(check_srg_equivalence(corpus::petersen()).ok());
    CHECK(check_srg_equivalence(corpus::complete(4)).ok());
    for (const Graph& gamma : corpus::all_graphs(4)) CHECK(check_srg_equivalence(gamma).ok());

    Report pet = check_srg_equivalence(corpus::petersen());
    REQUIRE(pet.items.size() == 2); // equivalence plus parameter match
    auto par = check_vsr(all_positive(corpus::petersen()));
    check_params(par, 0, 3, 1, 3, "general");
}

TEST_CASE("negation flips t and rho0") {
    for (const SignedGraph& g : corpus::all_signed_simple(4)) {
        auto par = check_vsr(g);
        auto npar = check_vsr(negate(g));
        REQUIRE(par.has_value() == npar.has_value());
        if (!par) continue;
        CHECK(npar->t == -par->t);
        CHECK(npar->k == par->k);
        CHECK(npar->p == par->p);
        CHECK(npar->rho0 == -par->rho0);
    }
}

TEST_CASE("parameters of switching equivalent vsr graphs") {
    for (const SignedGraph& g : corpus::all_signed_simple(4)) {
        auto par = check_vsr(g);
        if (!par) continue;
        for (std::uint32_t mask = 0; mask < 16; ++mask) {
            std::vector<int> vals;
            for (int v = 0; v < 4; ++v) vals.push_back(mask >> v & 1 ? -1 : 1);
            SignedGraph h = switch_fn(g, SwitchingFunction{vals});
            auto hpar = check_vsr(h);
            if (!hpar) continue;
            CHECK(hpar->k == par->k);
            CHECK(hpar->t == par->t);
            CHECK(std::llabs(hpar->p) == std::llabs(par->p));
        }
    }
}

TEST_CASE("the parameter identity holds on every detected instance") {
    std::vector<SignedGraph> pool = corpus::all_signed_simple(4);
    pool.push_back(all_positive(corpus::cycle(5)));
    pool.push_back(all_negative(corpus::cycle(5)));
    pool.push_back(all_positive(corpus::petersen()));
    pool.push_back(signed_complete(Graph(4, {{1, 2}, {3, 4}})));
    int found = 0;
    for (const SignedGraph& g : pool) {
        auto par = check_vsr(g);
        if (!par) continue;
        ++found;
        long long n = g.n();
        CHECK(par->rho0 * (par->rho0 - par->t) - par->k == par->p * (n - 1 - par->k));
    }
    CHECK(found > 10);
}

TEST_CASE("p0t0 graphs have weighing matrix adjacency") {
    int found = 0;
    for (const SignedGraph& g : corpus::all_signed_simple(4)) {
        auto par = check_vsr(g);
        if (!par || par->case_tag != "p0t0") continue;
        ++found;
        CHECK(is_weighing_matrix(adjacency(g)) == par->k);
    }
    CHECK(found > 0);
}
