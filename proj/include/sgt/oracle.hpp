#pragma once

// Brute force oracles.  Everything here recomputes results from first
// principles (explicit enumeration) so the production routines can be
// checked against them.  All entry points carry hard size guards and fail
// loudly rather than truncating.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sgt/int_matrix.hpp"
#include "sgt/matrices.hpp"
#include "sgt/report.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

// A circle as a closed path: edges[i] joins vertices[i] and
// vertices[(i+1) mod k]; vertices[0] is the smallest vertex on the circle.
struct Circle {
    std::vector<int> edges;
    std::vector<int> vertices;
    int sign;
};

namespace detail {

inline std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline void sort_circles(std::vector<Circle>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Circle& a, const Circle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return sorted_copy(a.edges) < sorted_copy(b.edges);
    });
}

// Circle enumeration by path search: for each anchor vertex s (the smallest
// vertex of the circles it finds) walk simple paths through larger vertices
// and record every closure back to s.  The closing edge id must exceed the
// first edge id, which fixes one of the two traversal directions.
inline std::vector<Circle> circles_by_paths(const SignedGraph& g) {
    std::vector<Circle> out;
    std::vector<char> on_path(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(g.m()) + 1, 0);
    std::vector<int> pverts, pedges;

    auto dfs = [&](auto&& self, int s, int v) -> void {
        for (int id : g.incident(v)) {
            if (used[id]) continue;
            int w = g.other_end(id, v);
            if (w == s) {
                if (!pedges.empty() && id > pedges.front()) {
                    Circle c;
                    c.edges = pedges;
                    c.edges.push_back(id);
                    c.vertices = pverts;
                    c.sign = 1;
                    for (int e : c.edges) c.sign *= g.sign(e);
                    out.push_back(std::move(c));
                }
            } else if (w > s && !on_path[w]) {
                on_path[w] = 1;
                used[id] = 1;
                pverts.push_back(w);
                pedges.push_back(id);
                self(self, s, w);
                pedges.pop_back();
                pverts.pop_back();
                used[id] = 0;
                on_path[w] = 0;
            }
        }
    };

    for (int s = 1; s <= g.n(); ++s) {
        on_path[s] = 1;
        pverts.assign(1, s);
        pedges.clear();
        dfs(dfs, s, s);
        on_path[s] = 0;
    }
    sort_circles(out);
    return out;
}

// Reconstruct a closed path from a circle's edge set.  If the set is not a
// single closed walk the result has fewer edges than the input; callers
// check the size.
inline Circle circle_from_edge_set(const SignedGraph& g, const std::vector<int>& edge_ids) {
    Circle c;
    c.sign = 1;
    std::vector<char> left(static_cast<std::size_t>(g.m()) + 1, 0);
    int start = g.n() + 1;
    for (int id : edge_ids) {
        left[id] = 1;
        c.sign *= g.sign(id);
        start = std::min({start, g.edge(id).u, g.edge(id).v});
    }
    int v = start;
    for (std::size_t step = 0; step < edge_ids.size(); ++step) {
        int next = 0;
        for (int id : g.incident(v))
            if (left[id]) { next = id; break; }
        if (next == 0) break;
        left[next] = 0;
        c.vertices.push_back(v);
        c.edges.push_back(next);
        v = g.other_end(next, v);
    }
    return c;
}

// Circle enumeration through the cycle space: every circle is the symmetric
// difference of a set of fundamental circles of a spanning forest, so all
// 2^nu - 1 nonempty combinations are formed and the connected 2-regular
// ones kept.
inline std::vector<Circle> circles_by_fundamental(const SignedGraph& g) {
    if (g.m() > 64)
        throw std::invalid_argument("circle enumeration: too large (more than 64 edges)");
    // Depth first spanning forest.
    std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, -1);
    std::vector<int> parent_edge(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<char> in_tree(static_cast<std::size_t>(g.m()) + 1, 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (parent[s] >= 0) continue;
        parent[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : g.incident(v)) {
                int w = g.other_end(id, v);
                if (parent[w] >= 0) continue;
                parent[w] = v;
                parent_edge[w] = id;
                in_tree[id] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::uint64_t> fundamentals;
    for (const Edge& e : g.edges()) {
        if (in_tree[e.id]) continue;
        std::uint64_t mask = 1ull << (e.id - 1);
        // Walk both ends to the root and cancel the common part.
        std::vector<char> seen(static_cast<std::size_t>(g.m()) + 1, 0);
        for (int v : {e.u, e.v})
            for (int x = v; parent_edge[x] != 0; x = parent[x]) seen[parent_edge[x]] ^= 1;
        for (int id = 1; id <= g.m(); ++id)
            if (seen[id]) mask |= 1ull << (id - 1);
        fundamentals.push_back(mask);
    }
    int nu = static_cast<int>(fundamentals.size());
    if (nu > 22)
        throw std::invalid_argument("circle enumeration: too large (cycle space dimension " +
                                    std::to_string(nu) + " exceeds 22)");

    std::vector<Circle> out;
    std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<int> ids, touched;
    std::uint64_t mask = 0;
    std::uint64_t prev_gray = 0;
    for (std::uint64_t i = 1; i < (1ull << nu); ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        mask ^= fundamentals[static_cast<std::size_t>(__builtin_ctzll(gray ^ prev_gray))];
        prev_gray = gray;
        ids.clear();
        touched.clear();
        for (std::uint64_t rest = mask; rest; rest &= rest - 1)
            ids.push_back(static_cast<int>(__builtin_ctzll(rest)) + 1);
        for (int id : ids)
            for (int v : {g.edge(id).u, g.edge(id).v}) {
                if (deg[v] == 0) touched.push_back(v);
                ++deg[v];
            }
        bool two_regular = true;
        for (int v : touched)
            if (deg[v] != 2) two_regular = false;
        // A 2-regular set is one circle iff it has as many vertices as
        // edges and the closed walk covers everything.
        if (two_regular && touched.size() == ids.size()) {
            Circle c = circle_from_edge_set(g, ids);
            if (c.edges.size() == ids.size()) out.push_back(std::move(c));
        }
        for (int v : touched) deg[v] = 0;
    }
    sort_circles(out);
    return out;
}

} // namespace detail

// All circles of g in a deterministic order (shortest first, then by edge
// set).  Guard: n <= 8.
inline std::vector<Circle> enumerate_circles(const SignedGraph& g) {
    if (g.n() > 8)
        throw std::invalid_argument("enumerate_circles: too large (n <= 8 required)");
    return detail::circles_by_fundamental(g);
}

// Check the parity rule on every theta subgraph: among the three circles
// formed by three internally disjoint paths joining the same two vertices,
// the number of negative circles is even.  Each circle sign is recomputed
// directly from its edge set.  Guard: n <= 7.
inline Report verify_theta_parity(const SignedGraph& g) {
    if (g.n() > 7)
        throw std::invalid_argument("verify_theta_parity: too large (n <= 7 required)");
    Report rep;
    long long checked = 0;
    bool all_even = true;
    std::string bad;

    auto circle_sign = [&](std::uint64_t edge_mask) {
        int s = 1;
        for (std::uint64_t rest = edge_mask; rest; rest &= rest - 1)
            s *= g.sign(static_cast<int>(__builtin_ctzll(rest)) + 1);
        return s;
    };

    for (int u = 1; u <= g.n(); ++u) {
        for (int v = u + 1; v <= g.n(); ++v) {
            struct Path {
                std::uint32_t internals;
                std::uint64_t edges;
            };
            std::vector<Path> paths;
            std::vector<char> on_path(static_cast<std::size_t>(g.n()) + 1, 0);
            std::vector<int> pedges;
            on_path[u] = 1;
            auto dfs = [&](auto&& self, int x) -> void {
                for (int id : g.incident(x)) {
                    int w = g.other_end(id, x);
                    if (w == v) {
                        std::uint32_t internals = 0;
                        std::uint64_t edges = 1ull << (id - 1);
                        for (int e : pedges) edges |= 1ull << (e - 1);
                        for (int y = 1; y <= g.n(); ++y)
                            if (on_path[y] && y != u) internals |= 1u << (y - 1);
                        paths.push_back({internals, edges});
                    } else if (w != u && !on_path[w]) {
                        on_path[w] = 1;
                        pedges.push_back(id);
                        self(self, w);
                        pedges.pop_back();
                        on_path[w] = 0;
                    }
                }
            };
            dfs(dfs, u);
            for (std::size_t i = 0; i < paths.size(); ++i)
                for (std::size_t j = i + 1; j < paths.size(); ++j) {
                    if (paths[i].internals & paths[j].internals) continue;
                    for (std::size_t k = j + 1; k < paths.size(); ++k) {
                        if ((paths[i].internals | paths[j].internals) & paths[k].internals)
                            continue;
                        ++checked;
                        int neg = 0;
                        if (circle_sign(paths[i].edges | paths[j].edges) < 0) ++neg;
                        if (circle_sign(paths[i].edges | paths[k].edges) < 0) ++neg;
                        if (circle_sign(paths[j].edges | paths[k].edges) < 0) ++neg;
                        if (neg % 2 != 0 && all_even) {
                            all_even = false;
                            bad = "between " + std::to_string(u) + " and " + std::to_string(v);
                        }
                    }
                }
        }
    }
    rep.add("theta-parity", all_even,
            all_even ? std::to_string(checked) + " theta subgraphs, negative circles always even"
                     : "odd number of negative circles in a theta subgraph " + bad);
    return rep;
}

struct WalkCounts {
    long long plus = 0;
    long long minus = 0;
};

// Count walks of length l from i to j by sign, by explicit enumeration.
// Also recomputes (A^l)_{ij} and insists it equals plus - minus.
// Guard: l <= 6.
inline WalkCounts count_signed_walks(const SignedGraph& g, int i, int j, int l) {
    if (l < 0) throw std::invalid_argument("count_signed_walks: negative length");
    if (l > 6) throw std::invalid_argument("count_signed_walks: too large (l <= 6 required)");
    g.check_vertex(i);
    g.check_vertex(j);
    WalkCounts counts;
    auto dfs = [&](auto&& self, int v, int left, int sign) -> void {
        if (left == 0) {
            if (v == j) (sign > 0 ? counts.plus : counts.minus)++;
            return;
        }
        for (int id : g.incident(v)) self(self, g.other_end(id, v), left - 1, sign * g.sign(id));
    };
    dfs(dfs, i, l, 1);
    long long expected = adjacency(g).pow(l)(i - 1, j - 1);
    if (expected != counts.plus - counts.minus)
        throw std::logic_error("count_signed_walks: walk counts disagree with matrix power");
    return counts;
}

struct PseudoforestComponent {
    std::vector<int> vertices;
    std::vector<int> edges;
    bool is_tree;
    std::vector<int> circle_edges; // empty for a tree component
    int circle_sign;               // 0 for a tree component
};

struct Pseudoforest {
    std::vector<int> edges; // ascending ids
    std::vector<PseudoforestComponent> components;
};

// All spanning subsets of exactly n edges whose components each contain one
// circle (no tree components) with every circle negative.  Guard: n <= 7.
inline std::vector<Pseudoforest> enumerate_unbalanced_pseudoforests(const SignedGraph& g) {
    if (g.n() > 7)
        throw std::invalid_argument(
            "enumerate_unbalanced_pseudoforests: too large (n <= 7 required)");
    std::vector<Pseudoforest> out;
    int n = g.n(), m = g.m();
    if (n == 0 || m < n) return out;
    std::vector<int> chosen;

    auto analyze = [&]() {
        // Components over all n vertices using the chosen edges.
        std::vector<std::vector<int>> inc(static_cast<std::size_t>(n) + 1);
        for (int id : chosen) {
            inc[g.edge(id).u].push_back(id);
            inc[g.edge(id).v].push_back(id);
        }
        std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
        std::vector<std::vector<int>> comp_verts;
        for (int s = 1; s <= n; ++s) {
            if (comp[s] >= 0) continue;
            int c = static_cast<int>(comp_verts.size());
            comp[s] = c;
            comp_verts.push_back({});
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp_verts[c].push_back(v);
                for (int id : inc[v]) {
                    int w = g.other_end(id, v);
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
                }
            }
        }
        Pseudoforest pf;
        pf.edges = chosen;
        for (auto& verts : comp_verts) {
            PseudoforestComponent pc;
            pc.vertices = verts;
            std::sort(pc.vertices.begin(), pc.vertices.end());
            for (int id : chosen) {
                if (comp[g.edge(id).u] == comp[pc.vertices[0]]) pc.edges.push_back(id);
            }
            // Exactly one circle per component and no tree components.
            if (pc.edges.size() != pc.vertices.size()) return;
            // Strip leaves; what remains is the unique circle.
            std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
            std::vector<char> alive(static_cast<std::size_t>(m) + 1, 0);
            for (int id : pc.edges) {
                alive[id] = 1;
                ++deg[g.edge(id).u];
                ++deg[g.edge(id).v];
            }
            bool changed = true;
            while (changed) {
                changed = false;
                for (int id : pc.edges) {
                    if (!alive[id]) continue;
                    if (deg[g.edge(id).u] == 1 || deg[g.edge(id).v] == 1) {
                        alive[id] = 0;
                        --deg[g.edge(id).u];
                        --deg[g.edge(id).v];
                        changed = true;
                    }
                }
            }
            pc.is_tree = false;
            pc.circle_sign = 1;
            for (int id : pc.edges)
                if (alive[id]) {
                    pc.circle_edges.push_back(id);
                    pc.circle_sign *= g.sign(id);
                }
            if (pc.circle_sign > 0) return;
            pf.components.push_back(std::move(pc));
        }
        out.push_back(std::move(pf));
    };

    auto choose = [&](auto&& self, int next, int left) -> void {
        if (left == 0) {
            analyze();
            return;
        }
        if (m - next + 1 < left) return;
        for (int id = next; id <= m; ++id) {
            chosen.push_back(id);
            self(self, id + 1, left - 1);
            chosen.pop_back();
        }
    };
    choose(choose, 1, n);
    return out;
}

// det K(Sigma) against the signless pseudoforest expansion: the determinant
// equals the sum of 4^(number of components) over the subsets enumerated
// above.
inline Report matrix_tree_check(const SignedGraph& g) {
    Report rep;
    long long det = exact_det(kirchhoff(g));
    auto forests = enumerate_unbalanced_pseudoforests(g);
    long long sum = 0;
    for (const auto& f : forests) {
        long long term = 1;
        for (std::size_t c = 0; c < f.components.size(); ++c) term *= 4;
        sum += term;
    }
    rep.add("matrix-tree", det == sum,
            "det K = " + std::to_string(det) + ", pseudoforest sum = " + std::to_string(sum) +
                " over " + std::to_string(forests.size()) + " subsets");
    return rep;
}

// Every distinct signature obtainable from g by switching, in lexicographic
// order of the edge sign vector.  Guard: n <= 12.
inline std::vector<SignedGraph> enumerate_switchings(const SignedGraph& g) {
    if (g.n() > 12)
        throw std::invalid_argument("enumerate_switchings: too large (n <= 12 required)");
    std::vector<std::vector<int>> forms;
    int n = g.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> signs;
        signs.reserve(static_cast<std::size_t>(g.m()));
        for (const Edge& e : g.edges()) {
            int tu = (mask >> (e.u - 1)) & 1 ? -1 : 1;
            int tv = (mask >> (e.v - 1)) & 1 ? -1 : 1;
            signs.push_back(tu * e.sign * tv);
        }
        forms.push_back(std::move(signs));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    std::vector<SignedGraph> out;
    out.reserve(forms.size());
    for (const auto& signs : forms) {
        std::vector<EdgeSpec> es;
        es.reserve(signs.size());
        for (const Edge& e : g.edges()) es.push_back({e.u, e.v, signs[e.id - 1]});
        out.push_back(SignedGraph(n, g.mode(), es));
    }
    return out;
}

} // namespace sgt
