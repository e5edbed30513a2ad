#pragma once

// Very strong regularity: A^2 - tA - kI = p Abar and Aj = rho0 j, where
// Abar is the adjacency matrix of the complement of the underlying graph.
// All arithmetic is integer exact; constants are solved from matrix entries
// and then verified entrywise.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/int_matrix.hpp"
#include "sgt/matrices.hpp"
#include "sgt/report.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

struct VsrParameters {
    long long t = 0;
    long long k = 0;
    long long p = 0;
    long long rho0 = 0;
    std::string case_tag;      // homogeneous-SRG, p0t0, p0, or general
    bool degenerate_p = false; // complete underlying graph leaves p unconstrained
};

namespace detail {

inline void require_simple(const SignedGraph& g, const char* who) {
    for (const Edge& e : g.edges())
        if (g.multiplicity(e.u, e.v) != 1)
            throw std::invalid_argument(std::string(who) + ": simple graph required");
}

} // namespace detail

// Abar = J - I - |A|.
inline IntMatrix complement_adjacency(const SignedGraph& g) {
    return IntMatrix::ones(g.n(), g.n()) - IntMatrix::identity(g.n()) - abs_adjacency(g);
}

// Case tags follow the classification by which of p and t vanish; the
// homogeneous complete graphs, where the first equation cannot see p at
// all, get their own tag.
inline std::optional<VsrParameters> check_vsr(const SignedGraph& g) {
    detail::require_simple(g, "check_vsr");
    auto reg = is_regular(g);
    if (!reg) return std::nullopt;
    VsrParameters par;
    par.k = reg->first + reg->second;
    par.rho0 = reg->first - reg->second;

    int n = g.n();
    IntMatrix a = adjacency(g);
    IntMatrix a2 = a * a;
    bool complete = 2 * g.m() == static_cast<long long>(n) * (n - 1);

    par.t = 0;
    for (int i = 0; i < n && par.t == 0; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != 0 && a2(i, j) != 0) {
                par.t = a2(i, j) * a(i, j);
                break;
            }
    par.p = 0;
    if (complete) {
        par.degenerate_p = true;
    } else {
        for (int i = 0; i < n && par.p == 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a(i, j) == 0 && a2(i, j) != 0) {
                    par.p = a2(i, j);
                    break;
                }
    }

    IntMatrix rhs = a.scaled(par.t) + IntMatrix::identity(n).scaled(par.k) +
                    complement_adjacency(g).scaled(par.p);
    if (!(a2 == rhs)) return std::nullopt;

    bool homogeneous = true;
    for (const Edge& e : g.edges())
        if (e.sign != g.edges().front().sign) homogeneous = false;
    if (complete && homogeneous)
        par.case_tag = "homogeneous-SRG";
    else if (par.p != 0)
        par.case_tag = "general";
    else if (par.t != 0)
        par.case_tag = "p0";
    else
        par.case_tag = "p0t0";
    return par;
}

// Count signed triangles on every edge and signed 2-paths across every
// nonadjacent pair directly, and compare against the claimed constants.
inline Report vsr_combinatorial_check(const SignedGraph& g, const VsrParameters& params) {
    detail::require_simple(g, "vsr_combinatorial_check");
    Report rep;
    int n = g.n();
    IntMatrix a = adjacency(g);

    long long edges_checked = 0;
    std::string t_fail;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a(i, j) == 0) continue;
            ++edges_checked;
            long long tp = 0, tn = 0;
            for (int w = 0; w < n; ++w) {
                if (a(i, w) == 0 || a(w, j) == 0) continue;
                (a(i, w) * a(w, j) * a(i, j) > 0 ? tp : tn) += 1;
            }
            if (tp - tn != params.t && t_fail.empty())
                t_fail = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "): t+ - t- = " + std::to_string(tp - tn) + ", expected " +
                         std::to_string(params.t);
        }
    rep.add("edge-triangle-count", t_fail.empty(),
            t_fail.empty() ? std::to_string(edges_checked) + " edges checked" : t_fail);

    long long pairs_checked = 0;
    std::string p_fail;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a(i, j) != 0) continue;
            ++pairs_checked;
            long long pp = 0, pn = 0;
            for (int w = 0; w < n; ++w) {
                if (a(i, w) == 0 || a(w, j) == 0) continue;
                (a(i, w) * a(w, j) > 0 ? pp : pn) += 1;
            }
            if (pp - pn != params.p && p_fail.empty())
                p_fail = "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "): p+ - p- = " + std::to_string(pp - pn) + ", expected " +
                         std::to_string(params.p);
        }
    rep.add("nonadjacent-two-path-count", p_fail.empty(),
            p_fail.empty() ? std::to_string(pairs_checked) + " nonadjacent pairs checked"
                           : p_fail);
    return rep;
}

// Returns c if the matrix has entries in {0, +1, -1} and W^T W = cI.
inline std::optional<long long> is_weighing_matrix(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && m(i, j) != 1 && m(i, j) != -1) return std::nullopt;
    IntMatrix wtw = m.transpose() * m;
    long long c = wtw.rows() > 0 ? wtw(0, 0) : 1;
    for (int i = 0; i < wtw.rows(); ++i)
        for (int j = 0; j < wtw.cols(); ++j)
            if (wtw(i, j) != (i == j ? c : 0)) return std::nullopt;
    return c;
}

// +Gamma is very strongly regular exactly when Gamma is strongly regular in
// the classical sense (constant degree, constant common-neighbour counts
// over adjacent and over nonadjacent pairs, vacuously where no such pair
// exists).
inline Report check_srg_equivalence(const Graph& gamma) {
    Report rep;
    SignedGraph plus = all_positive(gamma);
    auto vsr = check_vsr(plus);

    int n = gamma.n();
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [u, v] : gamma.edges()) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    bool srg = true;
    for (int v = 2; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] != deg[1]) srg = false;
    std::optional<int> lambda, mu;
    for (int u = 1; u <= n && srg; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int common = 0;
            for (int w = 1; w <= n; ++w)
                if (gamma.adjacent(u, w) && gamma.adjacent(w, v)) ++common;
            std::optional<int>& slot = gamma.adjacent(u, v) ? lambda : mu;
            if (!slot)
                slot = common;
            else if (*slot != common) {
                srg = false;
                break;
            }
        }

    std::string detail = std::string("vsr = ") + (vsr ? "yes" : "no") +
                         ", classical srg = " + (srg ? "yes" : "no");
    rep.add("srg-equivalence", vsr.has_value() == srg, detail);
    if (vsr && srg) {
        bool match = vsr->k == deg[1] && vsr->rho0 == deg[1];
        if (lambda) match = match && vsr->t == *lambda;
        if (mu && !vsr->degenerate_p) match = match && vsr->p == *mu;
        rep.add("srg-parameter-match", match,
                "(t,k,p,rho0) = (" + std::to_string(vsr->t) + "," + std::to_string(vsr->k) +
                    "," + std::to_string(vsr->p) + "," + std::to_string(vsr->rho0) + ")");
    }
    return rep;
}

} // namespace sgt
