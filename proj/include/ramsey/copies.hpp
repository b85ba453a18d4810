#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/typed_graph.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ramsey {

/// Injective vertex map from a pattern into a host. Entries for isolated
/// pattern vertices are -1: copies are edge subsets, so isolated pattern
/// vertices play no role.
struct Embedding {
    std::vector<Vertex> map;
};

/// One unlabelled copy of a pattern in a host: a representative embedding
/// and the host edges it covers, sorted by EdgeId.
struct Copy {
    Embedding embedding;
    std::vector<EdgeId> edges;
};

/// Returns true to keep searching.
using MonomorphismVisitor = std::function<bool(std::span<const Vertex> map)>;
/// Extra per-edge predicate: pattern edge {pa,pb} is mapped onto host edge {ha,hb}.
using EdgeFilter = std::function<bool(Vertex pa, Vertex pb, Vertex ha, Vertex hb)>;

/// Enumerates injective maps from the non-isolated vertices of `pattern`
/// into `host` that send edges to edges (not necessarily induced).
/// Returns the number of maps visited.
std::size_t for_each_monomorphism(const Graph& pattern, const Graph& host, const MonomorphismVisitor& visit,
                                  const EdgeFilter& filter = nullptr);

std::size_t count_monomorphisms(const Graph& pattern, const Graph& host);

/// All automorphisms of the non-isolated part of g, as vertex maps
/// (isolated vertices map to -1).
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);
std::size_t automorphism_count(const Graph& g);
/// Automorphisms that fix every edge setwise (they may swap its endpoints).
std::size_t edge_fixing_automorphism_count(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// One representative per distinct edge subset of `host` isomorphic to the
/// non-isolated part of `pattern`. Pattern must have at least one edge.
std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host);

/// Type-preserving isomorphism test. Throws DomainError when the patterns differ.
bool is_typomorphic(const TypedGraph& a, const TypedGraph& b);

/// Typed copies in g of the subgraph I of g.pattern() given by `mask`
/// (inclusion types). Throws DomainError if I is empty or not a subgraph of
/// the pattern.
std::vector<Copy> typed_copies(EdgeMask mask, const TypedGraph& g);
std::size_t count_typed_copies(EdgeMask mask, const TypedGraph& g);

} // namespace ramsey
