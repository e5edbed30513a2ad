#pragma once

// Line graphs of signed graphs.  Given a bidirection eta of the source, the
// line graph has one vertex per source edge, one edge for every coincidence
// of two source edges at a vertex, bidirected by eta'(e_vw, e) = eta(v, e).
// Cancelling the digons of the line graph yields the reduced line graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgt/balance.hpp"
#include "sgt/int_matrix.hpp"
#include "sgt/matrices.hpp"
#include "sgt/oracle.hpp"
#include "sgt/report.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/spectra.hpp"

namespace sgt {

struct OrientedLineGraph {
    SignedGraph graph;       // vertices are the source edge ids
    Orientation orientation; // eta' on the line graph
    SignedGraph source;
    Orientation source_orientation;
    std::vector<int> generated_at; // source vertex of line edge id (index id-1)
};

inline OrientedLineGraph line_graph(const SignedGraph& g, const Orientation& o) {
    if (!o.consistent_with(g))
        throw std::invalid_argument("line_graph: orientation does not belong to this graph");
    std::vector<EdgeSpec> es;
    std::vector<std::array<int, 2>> eta;
    std::vector<int> gen;
    for (int v = 1; v <= g.n(); ++v) {
        const std::vector<int>& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                int e = inc[i], f = inc[j];
                int eta_e = o.eta(v, e), eta_f = o.eta(v, f);
                es.push_back({e, f, -eta_e * eta_f});
                eta.push_back({eta_e, eta_f});
                gen.push_back(v);
            }
    }
    SignedGraph lg(g.m(), GraphMode::simply_signed, es);
    Orientation lo(lg, eta);
    return OrientedLineGraph{lg, lo, g, o, gen};
}

// Reduced line graph: parallel pairs cancel, leaving a simple signed graph
// on the source edge ids.
inline SignedGraph reduce(const OrientedLineGraph& lg) {
    std::vector<EdgeSpec> es;
    for (const Edge& e : lg.graph.edges())
        if (lg.graph.multiplicity(e.u, e.v) == 1) es.push_back({e.u, e.v, e.sign});
    return SignedGraph(lg.graph.n(), GraphMode::simple, es);
}

// A(Lambda) = 2I - H^T H, exactly, for the incidence matrix of the source
// under the same bidirection.
inline Report line_adjacency_identity(const SignedGraph& g, const Orientation& o) {
    Report rep;
    OrientedLineGraph lg = line_graph(g, o);
    IntMatrix h = incidence(g, o);
    IntMatrix rhs = IntMatrix::identity(g.m()).scaled(2) - h.transpose() * h;
    rep.add("line-adjacency-identity", adjacency(lg.graph) == rhs,
            "order " + std::to_string(g.m()));
    return rep;
}

// -Gamma(m1..mn): Gamma with all edges negative plus m_i pendant digons at
// vertex i, then the reduced line graph of that source.
inline SignedGraph generalized_line_graph(const Graph& gamma, const std::vector<int>& mult) {
    if (static_cast<int>(mult.size()) != gamma.n())
        throw std::invalid_argument("generalized_line_graph: one multiplicity per vertex required");
    int extra = 0;
    for (int mi : mult) {
        if (mi < 0) throw std::invalid_argument("generalized_line_graph: negative multiplicity");
        extra += mi;
    }
    std::vector<EdgeSpec> es;
    for (auto& [u, v] : gamma.edges()) es.push_back({u, v, -1});
    int next = gamma.n();
    for (int v = 1; v <= gamma.n(); ++v)
        for (int c = 0; c < mult[static_cast<std::size_t>(v - 1)]; ++c) {
            ++next;
            es.push_back({v, next, +1});
            es.push_back({v, next, -1});
        }
    SignedGraph source(gamma.n() + extra, GraphMode::simply_signed, es);
    return reduce(line_graph(source, default_orientation(source)));
}

namespace detail {

// Per-component test used by the multiplicity cross check: a component
// contributes eigenvalue 2 to the reduced line graph unless it is a tree or
// an unbalanced 1-tree.
inline bool component_is_tree_or_unbalanced_1tree(const SignedGraph& g,
                                                  const std::vector<int>& comp) {
    SignedGraph sub = induced_subgraph(g, comp);
    if (sub.m() == sub.n() - 1) return true;
    if (sub.m() == sub.n() && !is_balanced(sub).balanced) return true;
    return false;
}

} // namespace detail

// Largest eigenvalue of the reduced line graph adjacency is at most 2, with
// multiplicity of 2 equal to m - n + b of the source; 2 occurs at all iff
// some source component is neither a tree nor an unbalanced 1-tree.
// Eigenvalues within 1e-6 of 2 count toward the multiplicity.
inline Report check_line_eigenvalues(const SignedGraph& g, double tol) {
    Report rep;
    OrientedLineGraph lg = line_graph(g, default_orientation(g));
    IntMatrix a = adjacency(lg.graph);
    if (a.rows() == 0) {
        rep.add("line-eigenvalues", true, "edgeless source");
        return rep;
    }
    Spectrum spec = eig_sym(a, tol);
    rep.add("line-lambda-max", spec[0] <= 2 + tol, "lambda1 = " + std::to_string(spec[0]));
    auto [b, c] = balanced_component_count(g);
    int expected = g.m() - g.n() + b;
    int mult = multiplicity_near(spec, 2.0, 1e-6);
    rep.add("line-multiplicity-of-two", mult == expected,
            "multiplicity = " + std::to_string(mult) + ", m - n + b = " + std::to_string(expected));
    bool has_two = mult > 0;
    bool structural = false;
    for (const auto& comp : components(g))
        if (!detail::component_is_tree_or_unbalanced_1tree(g, comp)) structural = true;
    rep.add("line-two-iff-component-criterion", has_two == structural,
            "eigenvalue 2 present = " + std::to_string(has_two) +
                ", component criterion = " + std::to_string(structural));
    return rep;
}

// The incidence columns as root vectors: each has two nonzero entries, both
// +1 or -1, so each lies in the root system D_n.
struct RootVectorSet {
    std::vector<std::vector<long long>> vectors; // one per source edge, length n
};

inline RootVectorSet dn_representation(const SignedGraph& g, const Orientation& o) {
    IntMatrix h = incidence(g, o);
    RootVectorSet rv;
    rv.vectors.assign(static_cast<std::size_t>(g.m()),
                      std::vector<long long>(static_cast<std::size_t>(g.n()), 0));
    for (int e = 0; e < g.m(); ++e) {
        int nonzero = 0;
        for (int v = 0; v < g.n(); ++v) {
            long long x = h(v, e);
            rv.vectors[e][v] = x;
            if (x != 0) {
                ++nonzero;
                if (x != 1 && x != -1)
                    throw std::logic_error("dn_representation: entry not a unit");
            }
        }
        if (nonzero != 2)
            throw std::logic_error("dn_representation: column is not a D_n root");
    }
    return rv;
}

namespace detail {

struct Gf2Row {
    std::vector<std::uint64_t> mask;
    int sign; // expected sign of this combination
};

inline std::vector<std::uint64_t> edge_mask(int words, const std::vector<int>& ids) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(words), 0);
    for (int id : ids) m[static_cast<std::size_t>((id - 1) / 64)] |= 1ull << ((id - 1) % 64);
    return m;
}

inline bool mask_empty(const std::vector<std::uint64_t>& m) {
    for (std::uint64_t w : m)
        if (w) return false;
    return true;
}

inline int mask_lowbit(const std::vector<std::uint64_t>& m) {
    for (std::size_t w = 0; w < m.size(); ++w)
        if (m[w]) return static_cast<int>(w * 64 + __builtin_ctzll(m[w]));
    return -1;
}

inline void mask_xor(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

// Incremental echelon basis over GF(2) carrying an expected sign with each
// row.  Reduction of a target mask multiplies the expected signs of the
// rows used; a nonzero residue means the target is outside the span.
class SignedCycleBasis {
public:
    void add(std::vector<std::uint64_t> mask, int sign) {
        reduce(mask, sign);
        if (mask_empty(mask)) return; // dependent generator; nothing new
        rows_.push_back({std::move(mask), sign});
        std::sort(rows_.begin(), rows_.end(), [](const Gf2Row& a, const Gf2Row& b) {
            return mask_lowbit(a.mask) < mask_lowbit(b.mask);
        });
    }

    // Returns the expected sign if mask is in the span.
    std::optional<int> expected_sign(std::vector<std::uint64_t> mask) const {
        int sign = 1;
        reduce(mask, sign);
        if (!mask_empty(mask)) return std::nullopt;
        return sign;
    }

private:
    void reduce(std::vector<std::uint64_t>& mask, int& sign) const {
        for (const auto& row : rows_) {
            int low = mask_lowbit(row.mask);
            if (low < 0) continue;
            if (mask[static_cast<std::size_t>(low / 64)] >> (low % 64) & 1) {
                mask_xor(mask, row.mask);
                sign *= row.sign;
            }
        }
    }

    std::vector<Gf2Row> rows_;
};

} // namespace detail

// Validate every circle sign of the line graph against the structure rules:
// the three line edges of a vertex triangle multiply to -1; a derived
// circle keeps the sign of its source circle; every circle of the line
// graph is a set sum of vertex triangles and fundamental derived circles
// whose known signs predict its sign.  Guard: source n <= 6.  Enumeration
// of the line graph circles is capped; exceeding the cap is an error.
inline Report validate_circle_signs(const OrientedLineGraph& lg) {
    if (lg.source.n() > 6)
        throw std::invalid_argument("validate_circle_signs: too large (source n <= 6 required)");
    Report rep;
    const SignedGraph& src = lg.source;
    const SignedGraph& lam = lg.graph;

    // Lookup: (source vertex, source edge pair) -> line edge id.
    std::map<std::tuple<int, int, int>, int> at;
    for (const Edge& e : lam.edges())
        at[{lg.generated_at[static_cast<std::size_t>(e.id - 1)], e.u, e.v}] = e.id;

    int words = (lam.m() + 63) / 64;
    detail::SignedCycleBasis basis;

    // Vertex triangles.
    long long triangles = 0, triangle_bad = 0;
    for (int v = 1; v <= src.n(); ++v) {
        const std::vector<int>& inc = src.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                for (std::size_t k = j + 1; k < inc.size(); ++k) {
                    int a = at.at({v, inc[i], inc[j]});
                    int b = at.at({v, inc[i], inc[k]});
                    int c = at.at({v, inc[j], inc[k]});
                    ++triangles;
                    if (lam.sign(a) * lam.sign(b) * lam.sign(c) != -1) ++triangle_bad;
                    basis.add(detail::edge_mask(words, {a, b, c}), -1);
                }
    }
    rep.add("vertex-triangles", triangle_bad == 0,
            std::to_string(triangles) + " triangles, " + std::to_string(triangle_bad) +
                " with sign product not -1");

    // Derived circles of all source circles.
    auto derived_edges = [&](const Circle& c) {
        std::vector<int> ids;
        std::size_t k = c.edges.size();
        for (std::size_t i = 0; i < k; ++i) {
            int e = c.edges[i];
            int f = c.edges[(i + 1) % k];
            int shared = c.vertices[(i + 1) % k];
            ids.push_back(at.at({shared, std::min(e, f), std::max(e, f)}));
        }
        return ids;
    };

    std::vector<Circle> source_circles = enumerate_circles(src);
    long long derived_bad = 0;
    for (const Circle& c : source_circles) {
        std::vector<int> ids = derived_edges(c);
        int s = 1;
        for (int id : ids) s *= lam.sign(id);
        if (s != c.sign) ++derived_bad;
    }
    rep.add("derived-circles", derived_bad == 0,
            std::to_string(source_circles.size()) + " source circles, " +
                std::to_string(derived_bad) + " derived sign mismatches");

    // Fundamental derived circles join the spanning set.
    {
        detail::Forest f = detail::spanning_forest(src);
        for (const Edge& e : src.edges()) {
            if (f.in_tree[e.id - 1]) continue;
            Circle c = detail::circle_from_edge_set(src, detail::sorted_copy(
                                                             detail::fundamental_circle(src, f, e.id)));
            basis.add(detail::edge_mask(words, derived_edges(c)), c.sign);
        }
    }

    // Every circle of the line graph must decompose with the right sign.
    std::vector<Circle> lam_circles = detail::circles_by_paths(lam);
    if (lam_circles.size() > 3000000)
        throw std::invalid_argument("validate_circle_signs: too large (line graph circle count)");
    long long mismatches = 0;
    for (const Circle& c : lam_circles) {
        auto expect = basis.expected_sign(detail::edge_mask(words, c.edges));
        if (!expect)
            throw std::runtime_error(
                "validate_circle_signs: circle outside the span of vertex triangles "
                "and fundamental derived circles");
        if (*expect != c.sign) ++mismatches;
    }
    rep.add("circle-decomposition", mismatches == 0,
            std::to_string(lam_circles.size()) + " line graph circles, " +
                std::to_string(mismatches) + " sign mismatches");
    return rep;
}

struct EigenvalueTwoWitness {
    Report report;
    std::optional<std::vector<int>> vertices;
};

// If the largest adjacency eigenvalue reaches 2, find the lexicographically
// first induced subgraph whose largest eigenvalue is within tol of 2.
// Guard: n <= 8.
inline EigenvalueTwoWitness check_eigenvalue_two_subgraph(const SignedGraph& g, double tol) {
    if (g.n() > 8)
        throw std::invalid_argument("check_eigenvalue_two_subgraph: too large (n <= 8 required)");
    EigenvalueTwoWitness out;
    if (g.n() == 0) {
        out.report.add_advisory("eigenvalue-two", true, "empty graph");
        return out;
    }
    double l1 = eig_sym(adjacency(g), tol)[0];
    if (l1 < 2 - tol) {
        out.report.add_advisory("eigenvalue-two", true,
                                "lambda1 = " + std::to_string(l1) + " below 2; nothing to find");
        return out;
    }
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        std::vector<int> vs;
        for (int v = 1; v <= g.n(); ++v)
            if (mask >> (v - 1) & 1) vs.push_back(v);
        subsets.push_back(std::move(vs));
    }
    std::sort(subsets.begin(), subsets.end());
    for (const auto& vs : subsets) {
        SignedGraph sub = induced_subgraph(g, vs);
        if (sub.m() == 0) continue;
        double ls = eig_sym(adjacency(sub), tol)[0];
        if (std::abs(ls - 2) <= tol) {
            out.vertices = vs;
            out.report.add("eigenvalue-two-witness", true,
                           "induced subgraph on " + std::to_string(vs.size()) +
                               " vertices has lambda1 = " + std::to_string(ls));
            out.report.add("eigenvalue-two-converse", l1 >= ls - tol,
                           "lambda1(g) = " + std::to_string(l1));
            return out;
        }
    }
    out.report.add("eigenvalue-two-witness", false,
                   "lambda1 = " + std::to_string(l1) + " but no induced subgraph found");
    return out;
}

} // namespace sgt
