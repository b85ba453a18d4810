#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

using ramsey::Graph;

/// One representative of every isomorphism class of graphs on exactly n
/// vertices (isolated vertices allowed), built by edge augmentation.
std::vector<Graph> all_graphs(int n);

/// Same classes with isolated vertices removed and at least one edge,
/// deduplicated; all graphs with at most n non-isolated vertices.
std::vector<Graph> all_nonempty_graphs_up_to(int n);

/// Random graph on n vertices, each pair present with probability p.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random connected-ish graph: a random graph that is retried until it has
/// at least one edge.
Graph random_nonempty_graph(int n, double p, std::uint64_t seed);

/// Brute-force oracles over every nonempty edge subset; subgraph vertices are
/// the endpoints of the chosen edges.
ramsey::Rational oracle_m2(const Graph& f);
ramsey::Rational oracle_m2_asym(const Graph& f1, const Graph& f2);
ramsey::Rational oracle_max_density(const Graph& g);

/// Exhaustive search over all r^e colourings.
bool oracle_arrows(const Graph& g, const std::vector<Graph>& targets);

} // namespace testing_support
