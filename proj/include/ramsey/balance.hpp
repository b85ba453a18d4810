#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <vector>

namespace ramsey {

/// Weights on the edges of a pattern H, indexed by EdgeId, each >= 1.
class WeightFunction {
public:
    WeightFunction() = default;
    /// Throws DomainError if a weight is below 1.
    explicit WeightFunction(std::vector<Rational> weights);
    static WeightFunction uniform(std::size_t edges);

    std::size_t size() const { return w_.size(); }
    const Rational& operator[](EdgeId e) const { return w_[e]; }
    const std::vector<Rational>& values() const { return w_; }
    /// w_I for the masked edges.
    Rational sum(EdgeMask mask) const;
    bool all_integer() const;
    /// Throws DomainError unless the domain is exactly E(h).
    void check_domain(const Graph& h) const;

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

private:
    std::vector<Rational> w_;
};

/// Output of the weight solver: every residual is zero and tight[e] is a
/// subgraph containing e with v - w/m2(H,F) = 2 - 1/m2(F).
struct BalanceCertificate {
    WeightFunction weights;
    std::vector<Rational> residuals;
    std::vector<EdgeMask> tight;
    Rational m2_asym;  // m2(H, F)
    Rational m2_forbidden;  // m2(F)
};

struct ResidualDetail {
    Rational residual;
    /// Minimizing subgraph; ties go to fewer edges, then to the
    /// lexicographically smallest edge list.
    EdgeMask minimizer = 0;
};

/// r_e(w) = min{ v_I - w_I/m2(H,F) : e in I } - 2 + 1/m2(F), minimized over
/// induced subgraphs of H without isolated vertices. Throws
/// DensityOrderError if m2(H) < m2(F).
Rational residual(const Graph& h, const Graph& f, const WeightFunction& w, EdgeId e);
ResidualDetail residual_detail(const Graph& h, const Graph& f, const WeightFunction& w, EdgeId e);

/// Deterministic weights making H (w,F)-balanced. Edges are visited once in
/// EdgeId order; an edge with positive residual r gets w(e) += m2(H,F) * r,
/// which makes one of its constraints tight without breaking any other.
BalanceCertificate solve_balanced_weights(const Graph& h, const Graph& f);

bool verify_balanced(const Graph& h, const Graph& f, const WeightFunction& w);

} // namespace ramsey
