#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr int kMaxVertices = 64;

using Vertex = int;
/// Bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;
/// Index into a graph's lexicographically sorted edge list.
using EdgeId = std::size_t;
/// Subset of the edges of a small graph (at most 64 edges), bit i = EdgeId i.
using EdgeMask = std::uint64_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    /// Normalizes so that u < v.
    static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }

/// Simple undirected graph on vertices 0..n-1, n <= 64. Immutable once
/// built; edges are kept in lexicographic order, which defines EdgeId.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws DomainError on loops, repeated edges or endpoints >= n.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    bool has_edge(Vertex a, Vertex b) const { return a != b && (adj_[a] >> b) & 1U; }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
    /// Like edge_id but the edge is known to exist.
    EdgeId id_of(Vertex a, Vertex b) const;

    VertexSet neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return popcount(adj_[v]); }
    VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : (bit(n_) - 1); }
    /// Vertices incident to at least one edge.
    VertexSet support() const;

    std::size_t induced_edge_count(VertexSet s) const;
    /// Edge ids of the subgraph induced on s.
    std::vector<EdgeId> induced_edge_ids(VertexSet s) const;
    /// Vertices touched by the given edges.
    VertexSet vertices_of(std::span<const EdgeId> ids) const;
    VertexSet vertices_of(EdgeMask mask) const;

    /// Same vertex set, only the masked edges (requires size() <= 64).
    Graph edge_subgraph(EdgeMask mask) const;
    Graph with_edge(Edge e) const;
    /// Edge {a,b} becomes {perm[a], perm[b]}.
    Graph relabelled(std::span<const Vertex> perm) const;
    /// Drops isolated vertices, renumbering the rest in increasing order.
    Graph without_isolated() const;

    EdgeMask full_mask() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    void add_unchecked(Edge e);
    void finish();

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::vector<Edge> edges_;
};

/// Small named graphs used by tests, fixtures and the CLI.
namespace graphs {
Graph complete(int n);
Graph cycle(int n);
/// Path with `edges` edges (edges + 1 vertices).
Graph path(int edges);
/// K_{1,k}.
Graph star(int k);
/// k disjoint edges.
Graph matching(int k);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Adds a new vertex joined to `at`.
Graph with_pendant(const Graph& g, Vertex at);
} // namespace graphs

} // namespace ramsey
