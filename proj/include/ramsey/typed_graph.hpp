#pragma once

#include "ramsey/graph.hpp"

#include <memory>
#include <vector>

namespace ramsey {

/// A graph whose edges carry types drawn from the edge set of a fixed
/// pattern H. type(i) is the pattern EdgeId of host edge i.
class TypedGraph {
public:
    /// Throws DomainError if `types` does not cover every edge or names a
    /// type outside E(pattern).
    TypedGraph(Graph graph, std::shared_ptr<const Graph> pattern, std::vector<EdgeId> types);

    /// The pattern H viewed as a typed graph (inclusion types), restricted to
    /// the edges in `mask`, on H's own vertex set.
    static TypedGraph from_pattern_subgraph(std::shared_ptr<const Graph> pattern, EdgeMask mask);

    const Graph& graph() const { return graph_; }
    const Graph& pattern() const { return *pattern_; }
    const std::shared_ptr<const Graph>& pattern_ptr() const { return pattern_; }
    const std::vector<EdgeId>& types() const { return types_; }
    EdgeId type(EdgeId host_edge) const { return types_[host_edge]; }
    /// Type of the edge {a,b}, which must exist.
    EdgeId type_of(Vertex a, Vertex b) const { return types_[graph_.id_of(a, b)]; }

    bool same_pattern(const TypedGraph& other) const;

    /// Keeps only the masked host edges with their types (requires <= 64 edges).
    TypedGraph edge_subgraph(EdgeMask mask) const;

    friend bool operator==(const TypedGraph& a, const TypedGraph& b) {
        return a.graph_ == b.graph_ && a.types_ == b.types_ && a.same_pattern(b);
    }

private:
    Graph graph_;
    std::shared_ptr<const Graph> pattern_;
    std::vector<EdgeId> types_;
};

} // namespace ramsey
