#include "ramsey/graph.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>

namespace ramsey {

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("vertex count " + std::to_string(n) + " outside [0, 64]");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& raw : edges) {
        if (raw.u == raw.v) throw DomainError("loop at vertex " + std::to_string(raw.u));
        Edge e = Edge::of(raw.u, raw.v);
        if (e.u < 0 || e.v >= n_) throw DomainError("edge " + to_string(e) + " has an endpoint outside the vertex range");
        if (has_edge(e.u, e.v)) throw DomainError("repeated edge " + to_string(e));
        add_unchecked(e);
    }
    finish();
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_unchecked(Edge e) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
    edges_.push_back(e);
}

void Graph::finish() { std::sort(edges_.begin(), edges_.end()); }

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || !has_edge(a, b)) return std::nullopt;
    return id_of(a, b);
}

EdgeId Graph::id_of(Vertex a, Vertex b) const {
    Edge e = Edge::of(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<EdgeId>(it - edges_.begin());
}

VertexSet Graph::support() const {
    VertexSet s = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (adj_[v]) s |= bit(v);
    return s;
}

std::size_t Graph::induced_edge_count(VertexSet s) const {
    std::size_t twice = 0;
    for (VertexSet rest = s; rest; rest &= rest - 1)
        twice += static_cast<std::size_t>(popcount(adj_[std::countr_zero(rest)] & s));
    return twice / 2;
}

std::vector<EdgeId> Graph::induced_edge_ids(VertexSet s) const {
    std::vector<EdgeId> ids;
    for (EdgeId i = 0; i < edges_.size(); ++i)
        if ((s >> edges_[i].u & 1U) && (s >> edges_[i].v & 1U)) ids.push_back(i);
    return ids;
}

VertexSet Graph::vertices_of(std::span<const EdgeId> ids) const {
    VertexSet s = 0;
    for (EdgeId i : ids) s |= bit(edges_[i].u) | bit(edges_[i].v);
    return s;
}

VertexSet Graph::vertices_of(EdgeMask mask) const {
    VertexSet s = 0;
    for (; mask; mask &= mask - 1) {
        const Edge& e = edges_[static_cast<EdgeId>(std::countr_zero(mask))];
        s |= bit(e.u) | bit(e.v);
    }
    return s;
}

EdgeMask Graph::full_mask() const {
    if (edges_.size() > 64) throw LimitError("edge masks support at most 64 edges");
    return edges_.size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << edges_.size()) - 1;
}

Graph Graph::edge_subgraph(EdgeMask mask) const {
    if (edges_.size() > 64) throw LimitError("edge masks support at most 64 edges");
    Graph g(n_);
    for (; mask; mask &= mask - 1) g.add_unchecked(edges_[static_cast<EdgeId>(std::countr_zero(mask))]);
    g.finish();
    return g;
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, es);
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw DomainError("relabelling must cover every vertex");
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) es.push_back(Edge::of(perm[e.u], perm[e.v]));
    return Graph(n_, es);
}

Graph Graph::without_isolated() const {
    std::array<int, kMaxVertices> index{};
    int m = 0;
    for (Vertex v = 0; v < n_; ++v) index[v] = adj_[v] ? m++ : -1;
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_) es.push_back(Edge{index[e.u], index[e.v]});
    return Graph(m, es);
}

namespace graphs {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.push_back({a, b});
    return Graph(n, es);
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a) es.push_back(Edge::of(a, (a + 1) % n));
    return Graph(n, es);
}

Graph path(int edges) {
    std::vector<Edge> es;
    for (int a = 0; a < edges; ++a) es.push_back({a, a + 1});
    return Graph(edges + 1, es);
}

Graph star(int k) {
    std::vector<Edge> es;
    for (int a = 1; a <= k; ++a) es.push_back({0, a});
    return Graph(k + 1, es);
}

Graph matching(int k) {
    std::vector<Edge> es;
    for (int a = 0; a < k; ++a) es.push_back({2 * a, 2 * a + 1});
    return Graph(2 * k, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), es);
}

Graph with_pendant(const Graph& g, Vertex at) {
    std::vector<Edge> es = g.edges();
    es.push_back({at, g.order()});
    return Graph(g.order() + 1, es);
}

} // namespace graphs

} // namespace ramsey
