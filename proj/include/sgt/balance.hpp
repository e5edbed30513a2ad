#pragma once

// Balance and switching equivalence.  A signed graph is balanced when every
// circle has positive sign; equivalently the vertices split into two sides
// with the negative edges exactly the crossing edges, and equivalently the
// graph switches to the all positive signature.

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Sign of a walk given as a sequence of edge ids.
inline int walk_sign(const SignedGraph& g, const std::vector<int>& walk) {
    int s = 1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Edge& e = g.edge(walk[i]);
        if (i > 0) {
            const Edge& prev = g.edge(walk[i - 1]);
            bool chained = e.u == prev.u || e.u == prev.v || e.v == prev.u || e.v == prev.v;
            if (!chained)
                throw std::invalid_argument("walk_sign: edges " + std::to_string(prev.id) +
                                            " and " + std::to_string(e.id) +
                                            " do not share a vertex");
        }
        s *= e.sign;
    }
    return s;
}

namespace detail {

// Deterministic BFS spanning forest.  Roots are the lowest vertex of each
// component; neighbours are visited in ascending edge id order.  theta[v]
// carries the sign of the tree path from v to its root, so switching by
// theta makes every tree edge positive.
struct Forest {
    std::vector<int> parent;      // per vertex, 0 at roots
    std::vector<int> parent_edge; // per vertex, 0 at roots
    std::vector<int> depth;
    std::vector<int> theta;       // per vertex
    std::vector<int> comp;        // component index per vertex
    std::vector<char> in_tree;    // per edge id (index id-1)
    int comps = 0;
};

inline Forest spanning_forest(const SignedGraph& g) {
    Forest f;
    f.parent.assign(static_cast<std::size_t>(g.n()) + 1, -1);
    f.parent_edge.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    f.depth.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    f.theta.assign(static_cast<std::size_t>(g.n()) + 1, 1);
    f.comp.assign(static_cast<std::size_t>(g.n()) + 1, -1);
    f.in_tree.assign(static_cast<std::size_t>(g.m()), 0);
    for (int s = 1; s <= g.n(); ++s) {
        if (f.comp[s] >= 0) continue;
        f.comp[s] = f.comps;
        f.parent[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : g.incident(v)) {
                int w = g.other_end(id, v);
                if (f.comp[w] >= 0) continue;
                f.comp[w] = f.comps;
                f.parent[w] = v;
                f.parent_edge[w] = id;
                f.depth[w] = f.depth[v] + 1;
                f.theta[w] = f.theta[v] * g.sign(id);
                f.in_tree[id - 1] = 1;
                q.push(w);
            }
        }
        ++f.comps;
    }
    return f;
}

// The circle closed by a non-tree edge: tree path between its ends plus the
// edge itself, as a closed edge sequence starting at e.u.
inline std::vector<int> fundamental_circle(const SignedGraph& g, const Forest& f, int edge_id) {
    const Edge& e = g.edge(edge_id);
    int a = e.u, b = e.v;
    std::vector<int> up, down;
    while (f.depth[a] > f.depth[b]) {
        up.push_back(f.parent_edge[a]);
        a = f.parent[a];
    }
    while (f.depth[b] > f.depth[a]) {
        down.push_back(f.parent_edge[b]);
        b = f.parent[b];
    }
    while (a != b) {
        up.push_back(f.parent_edge[a]);
        down.push_back(f.parent_edge[b]);
        a = f.parent[a];
        b = f.parent[b];
    }
    std::reverse(down.begin(), down.end());
    up.insert(up.end(), down.begin(), down.end());
    up.push_back(edge_id);
    return up;
}

} // namespace detail

struct BalanceCertificate {
    bool balanced;
    // Harary bipartition (X, Y): the negative edges are exactly the edges
    // between X and Y.  Present iff balanced; either side may be empty.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
    // A negative circle as a closed edge sequence.  Present iff unbalanced.
    std::optional<std::vector<int>> witness;
};

inline BalanceCertificate is_balanced(const SignedGraph& g) {
    detail::Forest f = detail::spanning_forest(g);
    for (const Edge& e : g.edges()) {
        if (f.in_tree[e.id - 1]) continue;
        if (f.theta[e.u] * e.sign * f.theta[e.v] < 0) {
            BalanceCertificate c;
            c.balanced = false;
            c.witness = detail::fundamental_circle(g, f, e.id);
            return c;
        }
    }
    BalanceCertificate c;
    c.balanced = true;
    std::vector<int> x, y;
    for (int v = 1; v <= g.n(); ++v)
        (f.theta[v] < 0 ? x : y).push_back(v);
    c.bipartition = std::make_pair(std::move(x), std::move(y));
    return c;
}

// Antibalance: balance of the negated graph.  The certificate refers to
// negate(g): its bipartition cuts the positive edges of g and its witness
// circle has an even number of positive g edges.
inline BalanceCertificate is_antibalanced(const SignedGraph& g) {
    return is_balanced(negate(g));
}

// (number of balanced components, number of components).
inline std::pair<int, int> balanced_component_count(const SignedGraph& g) {
    detail::Forest f = detail::spanning_forest(g);
    std::vector<char> bad(static_cast<std::size_t>(f.comps), 0);
    for (const Edge& e : g.edges()) {
        if (f.in_tree[e.id - 1]) continue;
        if (f.theta[e.u] * e.sign * f.theta[e.v] < 0) bad[f.comp[e.u]] = 1;
    }
    int b = 0;
    for (char c : bad)
        if (!c) ++b;
    return {b, f.comps};
}

namespace detail {

inline void require_same_underlying(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.n() != g2.n() || g1.m() != g2.m())
        throw std::invalid_argument("switching_equivalent: graphs differ in order or size");
    for (int id = 1; id <= g1.m(); ++id) {
        const Edge& a = g1.edge(id);
        const Edge& b = g2.edge(id);
        bool same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
        if (!same)
            throw std::invalid_argument("switching_equivalent: underlying edges differ at id " +
                                        std::to_string(id));
    }
}

} // namespace detail

// A switching function theta with switch_fn(g1, theta) = g2, if one exists.
// Requires identical underlying edge lists (same ids and endpoints).
inline std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1,
                                                             const SignedGraph& g2) {
    detail::require_same_underlying(g1, g2);
    detail::Forest f1 = detail::spanning_forest(g1);
    detail::Forest f2 = detail::spanning_forest(g2);
    // Switching each graph tree positive leaves a canonical signature; the
    // two graphs are equivalent exactly when these signatures agree.
    std::vector<int> t1(f1.theta.begin() + 1, f1.theta.end());
    std::vector<int> t2(f2.theta.begin() + 1, f2.theta.end());
    SwitchingFunction th1{std::move(t1)}, th2{std::move(t2)};
    for (const Edge& e : g1.edges()) {
        int s1 = th1(e.u) * e.sign * th1(e.v);
        int s2 = th2(e.u) * g2.sign(e.id) * th2(e.v);
        if (s1 != s2) return std::nullopt;
    }
    SwitchingFunction theta = th1 * th2;
    if (!(switch_fn(g1, theta) == g2))
        throw std::logic_error("switching_equivalent: internal verification failed");
    return theta;
}

// Vertex bijection as a vector: image of vertex v is f[v-1].
using VertexBijection = std::vector<int>;

// Relabel g1 by the vertex bijection f, aligning its edges to the edge ids
// of g2.  Under a fixed f the digon pairs can be assigned to slots either
// way; theta fixes the choice.  A digon always carries the sign pair {+,-},
// so only the single edges constrain theta.
inline std::optional<std::pair<VertexBijection, SwitchingFunction>>
switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.n() > 8 || g2.n() > 8)
        throw std::invalid_argument("switching_isomorphic: graph too large (n <= 8 required)");
    if (g1.n() != g2.n() || g1.m() != g2.m()) return std::nullopt;
    int n = g1.n();
    VertexBijection f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) f[i] = i + 1;
    do {
        bool shape_ok = true;
        for (int u = 1; u <= n && shape_ok; ++u)
            for (int v = u + 1; v <= n && shape_ok; ++v)
                if (g1.multiplicity(u, v) != g2.multiplicity(f[u - 1], f[v - 1]))
                    shape_ok = false;
        if (!shape_ok) continue;
        // Inverse image of a g2 vertex.
        std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) inv[f[v - 1]] = v;
        // Compare the single edges as two signatures on the same shape.
        std::vector<EdgeSpec> s1, s2;
        for (int j = 1; j <= g2.m(); ++j) {
            const Edge& e = g2.edge(j);
            if (g2.multiplicity(e.u, e.v) != 1) continue;
            int src = g1.edge_ids_between(inv[e.u], inv[e.v]).at(0);
            s1.push_back({e.u, e.v, g1.sign(src)});
            s2.push_back({e.u, e.v, e.sign});
        }
        auto theta = switching_equivalent(SignedGraph(n, GraphMode::simple, s1),
                                          SignedGraph(n, GraphMode::simple, s2));
        if (!theta) continue;
        // Build the relabelled g1 with edges aligned to g2's ids.  Slot j
        // receives the g1 edge of sign theta(u) sigma2(j) theta(v): for a
        // single edge that is the mapped g1 sign by the equivalence just
        // found, and a digon supplies both signs, assigned to match.
        std::vector<EdgeSpec> es;
        es.reserve(static_cast<std::size_t>(g2.m()));
        for (int j = 1; j <= g2.m(); ++j) {
            const Edge& e = g2.edge(j);
            es.push_back({e.u, e.v, (*theta)(e.u) * e.sign * (*theta)(e.v)});
        }
        SignedGraph relabelled(n, g2.mode(), es);
        if (!(switch_fn(relabelled, *theta) == g2))
            throw std::logic_error("switching_isomorphic: internal verification failed");
        return std::make_pair(f, *theta);
    } while (std::next_permutation(f.begin(), f.end()));
    return std::nullopt;
}

} // namespace sgt
