#include "ramsey/typed_graph.hpp"

#include "ramsey/errors.hpp"

#include <bit>

namespace ramsey {

TypedGraph::TypedGraph(Graph graph, std::shared_ptr<const Graph> pattern, std::vector<EdgeId> types)
    : graph_(std::move(graph)), pattern_(std::move(pattern)), types_(std::move(types)) {
    if (!pattern_) throw DomainError("typed graph without a pattern");
    if (types_.size() != graph_.size())
        throw DomainError("type map covers " + std::to_string(types_.size()) + " edges, graph has " +
                          std::to_string(graph_.size()));
    for (EdgeId t : types_)
        if (t >= pattern_->size()) throw DomainError("type " + std::to_string(t) + " is not an edge of the pattern");
}

TypedGraph TypedGraph::from_pattern_subgraph(std::shared_ptr<const Graph> pattern, EdgeMask mask) {
    Graph sub = pattern->edge_subgraph(mask);
    std::vector<EdgeId> types;
    for (EdgeMask m = mask; m; m &= m - 1) types.push_back(static_cast<EdgeId>(std::countr_zero(m)));
    // edge_subgraph keeps the lexicographic order, which matches increasing EdgeId.
    return TypedGraph(std::move(sub), std::move(pattern), std::move(types));
}

bool TypedGraph::same_pattern(const TypedGraph& other) const {
    return pattern_ == other.pattern_ || *pattern_ == *other.pattern_;
}

TypedGraph TypedGraph::edge_subgraph(EdgeMask mask) const {
    std::vector<EdgeId> types;
    for (EdgeMask m = mask; m; m &= m - 1) types.push_back(types_[static_cast<EdgeId>(std::countr_zero(m))]);
    return TypedGraph(graph_.edge_subgraph(mask), pattern_, std::move(types));
}

} // namespace ramsey
