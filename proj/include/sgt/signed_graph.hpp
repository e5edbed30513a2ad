#pragma once

// Core model: signed graphs, switching functions and bidirected orientations.
//
// A signed graph is an unsigned graph together with an edge sign function
// sigma: E -> {+1,-1}.  Vertices are 1..n and edge ids are 1..m, dense in
// input order.  Two modes are supported:
//
//   simple        at most one edge per vertex pair
//   simply_signed parallel edges allowed only as one positive plus one
//                 negative edge on the same pair (a digon)
//
// Loops are excluded in both modes.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

enum class GraphMode { simple, simply_signed };

struct EdgeSpec {
    int u;
    int v;
    int sign;
};

struct Edge {
    int id;
    int u;
    int v;
    int sign;

    bool operator==(const Edge&) const = default;
};

inline void check_sign(int s, const char* what) {
    if (s != 1 && s != -1)
        throw std::invalid_argument(std::string(what) + ": sign must be +1 or -1");
}

class SignedGraph {
public:
    SignedGraph(int n, GraphMode mode, const std::vector<EdgeSpec>& edges)
        : n_(n), mode_(mode) {
        if (n < 0) throw std::invalid_argument("SignedGraph: negative order");
        edges_.reserve(edges.size());
        incident_.assign(static_cast<std::size_t>(n), {});
        int id = 0;
        for (const auto& e : edges) {
            ++id;
            if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
                throw std::invalid_argument("SignedGraph: edge " + std::to_string(id) +
                                            " has endpoint out of range");
            if (e.u == e.v)
                throw std::invalid_argument("SignedGraph: edge " + std::to_string(id) +
                                            " is a loop; loops are not allowed");
            check_sign(e.sign, "SignedGraph");
            edges_.push_back(Edge{id, e.u, e.v, e.sign});
            incident_[e.u - 1].push_back(id);
            incident_[e.v - 1].push_back(id);
        }
        validate_multiplicities();
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    GraphMode mode() const { return mode_; }

    const Edge& edge(int id) const {
        if (id < 1 || id > m())
            throw std::out_of_range("SignedGraph::edge: id out of range");
        return edges_[id - 1];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids incident to v, ascending.
    const std::vector<int>& incident(int v) const {
        check_vertex(v);
        return incident_[v - 1];
    }

    int sign(int id) const { return edge(id).sign; }

    int other_end(int id, int v) const {
        const Edge& e = edge(id);
        if (e.u == v) return e.v;
        if (e.v == v) return e.u;
        throw std::invalid_argument("SignedGraph::other_end: vertex not an endpoint");
    }

    bool incident_to(int id, int v) const {
        const Edge& e = edge(id);
        return e.u == v || e.v == v;
    }

    int underlying_degree(int v) const { return static_cast<int>(incident(v).size()); }

    // Number of parallel edges joining u and v.
    int multiplicity(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        int c = 0;
        for (int id : incident_[u - 1])
            if (other_end(id, u) == v) ++c;
        return c;
    }

    // Edge ids joining u and v, ascending.
    std::vector<int> edge_ids_between(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        std::vector<int> ids;
        for (int id : incident_[u - 1])
            if (other_end(id, u) == v) ids.push_back(id);
        return ids;
    }

    bool operator==(const SignedGraph& o) const {
        return n_ == o.n_ && mode_ == o.mode_ && edges_ == o.edges_;
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw std::out_of_range("SignedGraph: vertex " + std::to_string(v) + " out of range");
    }

private:
    void validate_multiplicities() const {
        for (const Edge& e : edges_) {
            auto ids = edge_ids_between(e.u, e.v);
            if (mode_ == GraphMode::simple && ids.size() > 1)
                throw std::invalid_argument("SignedGraph: parallel edges between " +
                                            std::to_string(e.u) + " and " + std::to_string(e.v) +
                                            " not allowed in simple mode");
            if (ids.size() > 2)
                throw std::invalid_argument("SignedGraph: more than two parallel edges between " +
                                            std::to_string(e.u) + " and " + std::to_string(e.v));
            if (ids.size() == 2 && edges_[ids[0] - 1].sign == edges_[ids[1] - 1].sign)
                throw std::invalid_argument("SignedGraph: parallel edges between " +
                                            std::to_string(e.u) + " and " + std::to_string(e.v) +
                                            " must carry opposite signs");
        }
    }

    int n_;
    GraphMode mode_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// Plain unsigned simple graph, used where only the shape matters.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("Graph: negative order");
        for (auto& [u, v] : edges_) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("Graph: endpoint out of range");
            if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        }
        adj_.assign(static_cast<std::size_t>(n) * n, false);
        for (auto& [u, v] : edges_) {
            if (adjacent(u, v)) throw std::invalid_argument("Graph: parallel edges not allowed");
            adj_[static_cast<std::size_t>(u - 1) * n + (v - 1)] = true;
            adj_[static_cast<std::size_t>(v - 1) * n + (u - 1)] = true;
        }
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::out_of_range("Graph::adjacent: vertex out of range");
        return adj_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<bool> adj_;
};

inline SignedGraph with_constant_sign(const Graph& g, int sign) {
    std::vector<EdgeSpec> es;
    es.reserve(g.edges().size());
    for (auto& [u, v] : g.edges()) es.push_back({u, v, sign});
    return SignedGraph(g.n(), GraphMode::simple, es);
}

inline SignedGraph all_positive(const Graph& g) { return with_constant_sign(g, +1); }
inline SignedGraph all_negative(const Graph& g) { return with_constant_sign(g, -1); }

// K_Gamma: the complete graph on V(Gamma) with the edges of Gamma negative
// and all other edges positive.
inline SignedGraph signed_complete(const Graph& g) {
    std::vector<EdgeSpec> es;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            es.push_back({u, v, g.adjacent(u, v) ? -1 : +1});
    return SignedGraph(g.n(), GraphMode::simple, es);
}

// Support of the underlying graph; a digon collapses to one edge.
inline Graph underlying(const SignedGraph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (g.multiplicity(u, v) > 0) es.push_back({u, v});
    return Graph(g.n(), es);
}

class SwitchingFunction {
public:
    explicit SwitchingFunction(std::vector<int> values) : theta_(std::move(values)) {
        for (int s : theta_) check_sign(s, "SwitchingFunction");
    }

    static SwitchingFunction all_plus(int n) {
        return SwitchingFunction(std::vector<int>(static_cast<std::size_t>(n), 1));
    }

    // -1 exactly on the listed vertices.
    static SwitchingFunction from_set(int n, const std::vector<int>& flipped) {
        std::vector<int> v(static_cast<std::size_t>(n), 1);
        for (int x : flipped) {
            if (x < 1 || x > n)
                throw std::out_of_range("SwitchingFunction::from_set: vertex out of range");
            v[x - 1] = -1;
        }
        return SwitchingFunction(std::move(v));
    }

    int n() const { return static_cast<int>(theta_.size()); }

    int operator()(int v) const {
        if (v < 1 || v > n())
            throw std::out_of_range("SwitchingFunction: vertex " + std::to_string(v) +
                                    " not in domain");
        return theta_[v - 1];
    }

    const std::vector<int>& values() const { return theta_; }

    SwitchingFunction operator*(const SwitchingFunction& o) const {
        if (n() != o.n())
            throw std::invalid_argument("SwitchingFunction::operator*: size mismatch");
        std::vector<int> v(theta_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= o.theta_[i];
        return SwitchingFunction(std::move(v));
    }

    bool operator==(const SwitchingFunction&) const = default;

private:
    std::vector<int> theta_;
};

inline void check_theta(const SignedGraph& g, const SwitchingFunction& theta) {
    if (theta.n() != g.n())
        throw std::domain_error("switching function does not cover every vertex");
}

// sigma^theta(uv) = theta(u) sigma(uv) theta(v).
inline SignedGraph switch_fn(const SignedGraph& g, const SwitchingFunction& theta) {
    check_theta(g, theta);
    std::vector<EdgeSpec> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        es.push_back({e.u, e.v, theta(e.u) * e.sign * theta(e.v)});
    return SignedGraph(g.n(), g.mode(), es);
}

inline SignedGraph switch_set(const SignedGraph& g, const std::vector<int>& X) {
    return switch_fn(g, SwitchingFunction::from_set(g.n(), X));
}

inline SignedGraph negate(const SignedGraph& g) {
    std::vector<EdgeSpec> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges()) es.push_back({e.u, e.v, -e.sign});
    return SignedGraph(g.n(), g.mode(), es);
}

// A bidirection eta: each edge end gets +1 or -1 with sigma(e) equal to
// -eta(u,e) eta(v,e).  Self contained: keeps its own copy of the edge list.
class Orientation {
public:
    Orientation(const SignedGraph& g, std::vector<std::array<int, 2>> eta)
        : edges_(g.edges()), eta_(std::move(eta)) {
        if (eta_.size() != edges_.size())
            throw std::invalid_argument("Orientation: one eta pair required per edge");
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            check_sign(eta_[i][0], "Orientation");
            check_sign(eta_[i][1], "Orientation");
            if (-eta_[i][0] * eta_[i][1] != edges_[i].sign)
                throw std::invalid_argument(
                    "Orientation: eta inconsistent with sign of edge " +
                    std::to_string(edges_[i].id));
        }
    }

    int m() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int id) const {
        if (id < 1 || id > m())
            throw std::out_of_range("Orientation::edge: id out of range");
        return edges_[id - 1];
    }

    int eta(int v, int id) const {
        const Edge& e = edge(id);
        if (v == e.u) return eta_[id - 1][0];
        if (v == e.v) return eta_[id - 1][1];
        throw std::invalid_argument("Orientation::eta: vertex " + std::to_string(v) +
                                    " is not an end of edge " + std::to_string(id));
    }

    const std::array<int, 2>& ends(int id) const {
        if (id < 1 || id > m())
            throw std::out_of_range("Orientation::ends: id out of range");
        return eta_[id - 1];
    }

    bool consistent_with(const SignedGraph& g) const {
        return g.edges() == edges_;
    }

    bool operator==(const Orientation& o) const {
        return edges_ == o.edges_ && eta_ == o.eta_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::array<int, 2>> eta_;
};

// Canonical orientation: on (min end, max end) a positive edge gets (-1,+1)
// and a negative edge gets (-1,-1).
inline Orientation default_orientation(const SignedGraph& g) {
    std::vector<std::array<int, 2>> eta;
    eta.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        int at_min = -1;
        int at_max = e.sign;
        if (e.u < e.v)
            eta.push_back({at_min, at_max});
        else
            eta.push_back({at_max, at_min});
    }
    return Orientation(g, eta);
}

// eta^theta(v,e) = theta(v) eta(v,e); the underlying signature becomes
// sigma^theta, so the result is consistent with the switched graph.
inline Orientation switch_orientation(const Orientation& o, const SwitchingFunction& theta) {
    std::vector<EdgeSpec> es;
    std::vector<std::array<int, 2>> eta;
    int n = theta.n();
    es.reserve(static_cast<std::size_t>(o.m()));
    eta.reserve(static_cast<std::size_t>(o.m()));
    for (int id = 1; id <= o.m(); ++id) {
        const Edge& e = o.edge(id);
        if (e.u > n || e.v > n)
            throw std::invalid_argument("switch_orientation: theta does not cover every vertex");
        es.push_back({e.u, e.v, theta(e.u) * e.sign * theta(e.v)});
        eta.push_back({theta(e.u) * o.ends(id)[0], theta(e.v) * o.ends(id)[1]});
    }
    SignedGraph switched(n, GraphMode::simply_signed, es);
    return Orientation(switched, eta);
}

// Negate both ends of one edge; the signature is unchanged.
inline Orientation reorient_edge(const Orientation& o, int edge_id) {
    std::vector<EdgeSpec> es;
    std::vector<std::array<int, 2>> eta;
    int n = 0;
    for (int id = 1; id <= o.m(); ++id) {
        const Edge& e = o.edge(id);
        n = std::max({n, e.u, e.v});
        es.push_back({e.u, e.v, e.sign});
        if (id == edge_id)
            eta.push_back({-o.ends(id)[0], -o.ends(id)[1]});
        else
            eta.push_back(o.ends(id));
    }
    if (edge_id < 1 || edge_id > o.m())
        throw std::out_of_range("reorient_edge: edge id out of range");
    SignedGraph same(n, GraphMode::simply_signed, es);
    return Orientation(same, eta);
}

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const SignedGraph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[s - 1] >= 0) continue;
        int c = static_cast<int>(out.size());
        std::vector<int> stack{s};
        std::vector<int> verts;
        comp[s - 1] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int id : g.incident(v)) {
                int w = g.other_end(id, v);
                if (comp[w - 1] < 0) {
                    comp[w - 1] = c;
                    stack.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(std::move(verts));
    }
    return out;
}

inline int component_count(const SignedGraph& g) {
    return static_cast<int>(components(g).size());
}

// Subgraph induced by the given vertices, relabelled 1..k in sorted order.
// Edge ids are renumbered in original id order.
inline SignedGraph induced_subgraph(const SignedGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> label(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i]);
        label[vertices[i]] = static_cast<int>(i) + 1;
    }
    std::vector<EdgeSpec> es;
    for (const Edge& e : g.edges())
        if (label[e.u] && label[e.v]) es.push_back({label[e.u], label[e.v], e.sign});
    return SignedGraph(static_cast<int>(vertices.size()), g.mode(), es);
}

// Remove one edge; remaining edges are renumbered in order.
inline SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
    if (edge_id < 1 || edge_id > g.m())
        throw std::out_of_range("delete_edge: edge id out of range");
    std::vector<EdgeSpec> es;
    for (const Edge& e : g.edges())
        if (e.id != edge_id) es.push_back({e.u, e.v, e.sign});
    return SignedGraph(g.n(), g.mode(), es);
}

inline SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
    std::vector<EdgeSpec> es;
    for (const Edge& e : a.edges()) es.push_back({e.u, e.v, e.sign});
    for (const Edge& e : b.edges()) es.push_back({e.u + a.n(), e.v + a.n(), e.sign});
    GraphMode mode = (a.mode() == GraphMode::simple && b.mode() == GraphMode::simple)
                         ? GraphMode::simple
                         : GraphMode::simply_signed;
    return SignedGraph(a.n() + b.n(), mode, es);
}

} // namespace sgt
