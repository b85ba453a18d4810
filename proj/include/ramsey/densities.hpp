#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <vector>

namespace ramsey {

/// Largest number of non-isolated vertices the exhaustive maximizations accept.
inline constexpr int kExhaustiveVertexLimit = 24;

/// Maximum of a density functional together with every maximizing
/// subgraph. Subgraphs are induced on a vertex subset and have no isolated
/// vertices; each maximizer is listed by its edges.
struct DensityReport {
    Rational value;
    std::vector<std::vector<Edge>> maximizers;
    bool unique = false;
};

/// 1/2 for a single edge, (e - 1)/(v - 2) otherwise; v counts non-isolated
/// vertices. Throws DomainError for an edgeless graph.
Rational d2(const Graph& f);

/// max d2(F') over subgraphs F' with at least one edge.
DensityReport m2(const Graph& f);

/// max e(F1') / (v(F1') - 2 + 1/m2(F2)) over nonempty F1' of F1. Throws
/// DensityOrderError when m2(F1) < m2(F2).
DensityReport m2_asym(const Graph& f1, const Graph& f2);

/// Same maximization with 1/m2(F2) supplied directly (no ordering check).
DensityReport m2_asym_given(const Graph& f1, const Rational& m2_f2);

/// e / (v - 2 + 1/m2_f2), the quantity maximized by m2_asym.
Rational asym_ratio(std::size_t edges, int vertices, const Rational& m2_f2);

bool is_2_balanced(const Graph& f);
/// d2(F) = m2(F) and every nonempty proper subgraph has d2 < m2(F).
bool is_strictly_2_balanced(const Graph& f);
/// F1 is the only maximizer of the m2_asym ratio; a proper subgraph that
/// ties the maximum makes this false.
bool is_strictly_balanced_wrt(const Graph& f1, const Graph& f2);

/// max e(G')/v(G') over subgraphs with at least one edge.
DensityReport max_density(const Graph& g);

} // namespace ramsey
