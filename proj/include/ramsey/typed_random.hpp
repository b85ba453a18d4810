#pragma once

#include "ramsey/balance.hpp"
#include "ramsey/copies.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/typed_graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

/// Parameters of the random typed graph G(n, p, w): every pair of [n] gets
/// a uniform type in E(H) and is kept with probability p^{w(type)}.
struct TypedModelParams {
    int n = 0;
    /// In (0, 1]; p = 1 is accepted for clamped threshold cells.
    double p = 0.5;
    std::shared_ptr<const Graph> pattern;
    WeightFunction weights;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Per pair of K_n in EdgeId order: draw the type, then one uniform u; the
/// pair is kept iff u < p^{w(type)}.
TypedGraph sample(const TypedModelParams& params);

/// The same draws also decide membership in G(n, p) (u < p), so the typed
/// graph is always an edge subset of the untyped one.
struct CoupledSample {
    TypedGraph typed;
    Graph untyped;
};
CoupledSample sample_coupled(const TypedModelParams& params);

/// Binomial random graph G(n, p), one uniform per pair in EdgeId order.
Graph sample_gnp(int n, double p, std::uint64_t seed);

/// A moment in floating point, plus its exact value when every exponent of
/// p is an integer (integral weights).
struct Moment {
    double value = 0.0;
    std::optional<Rational> exact;
};

/// E[X_I] = n(n-1)...(n-v_I+1) p^{w_I} / (|Aut_e(I)| e_H^{e_I}) where X_I
/// counts typed copies of I = H restricted to `mask`.
Moment expected_typed_copies(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w);

/// Var[X_I] by summing covariances over all copies overlapping a fixed one.
/// Throws LimitError when I has more than 6 vertices.
Moment exact_variance_typed_copies(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w);

struct UpperTailReport {
    Moment mean;
    Moment variance;
    /// Var / E^2, an upper bound on Pr(X_I >= 2 E[X_I]).
    double chebyshev = 0.0;
    /// min over nonempty I' of I of n^{v_I'} p^{w_I'}, and its minimizer
    /// (ties: fewer edges, then smaller edge list).
    double min_scale = 0.0;
    EdgeMask minimizer = 0;
    /// 1 / min_scale: the tail bound with its unspecified constant set to 1.
    double scale_bound = 0.0;
};

UpperTailReport upper_tail_bound(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w);

/// Every copy of H in K_n, embeddings included.
std::vector<Copy> copies_in_complete_graph(const Graph& h, int n);

/// The copies whose edges all lie in g and whose inherited types make them
/// typomorphic to g.pattern(). Throws DomainError if an embedding leaves [n].
std::vector<Copy> restrict_family(std::span<const Copy> family, const TypedGraph& g);

/// Quantities of Suen's inequality for the indicators 1_C = [C in H(G)].
/// Delta sums E[1_C 1_C'] over unordered pairs of distinct copies sharing an
/// edge; delta maximizes, over C, the sum of E[1_C'] over copies C' sharing
/// an edge with C (C itself included). A zero Delta drops its term.
struct SuenReport {
    std::size_t family_size = 0;
    double mu = 0.0;
    double Delta = 0.0;
    double delta = 0.0;
    double bound = 1.0;
    std::optional<Rational> mu_exact;
    std::optional<Rational> Delta_exact;
    std::optional<Rational> delta_exact;
};

SuenReport suen_bound(const Graph& h, std::span<const Copy> family, int n, const Rational& p, const WeightFunction& w);

} // namespace ramsey
