#include "ramsey/balance.hpp"

#include "ramsey/densities.hpp"
#include "ramsey/errors.hpp"

#include <bit>
#include <stdexcept>

namespace ramsey {

WeightFunction::WeightFunction(std::vector<Rational> weights) : w_(std::move(weights)) {
    for (const Rational& x : w_)
        if (x < 1) throw DomainError("weight " + to_string(x) + " is below 1");
}

WeightFunction WeightFunction::uniform(std::size_t edges) { return WeightFunction(std::vector<Rational>(edges, Rational(1))); }

Rational WeightFunction::sum(EdgeMask mask) const {
    Rational total = 0;
    for (; mask; mask &= mask - 1) total += w_[static_cast<EdgeId>(std::countr_zero(mask))];
    return total;
}

bool WeightFunction::all_integer() const {
    for (const Rational& x : w_)
        if (!is_integer(x)) return false;
    return true;
}

void WeightFunction::check_domain(const Graph& h) const {
    if (w_.size() != h.size())
        throw DomainError("weight function has " + std::to_string(w_.size()) + " entries but the pattern has " +
                          std::to_string(h.size()) + " edges");
}

namespace {

struct Constraint {
    EdgeMask edges = 0;
    int vertices = 0;
};

// The induced, isolated-vertex-free subgraphs of H; these dominate the
// minimum because extra edges on a fixed vertex set only lower v - w/m.
class BalanceContext {
public:
    BalanceContext(const Graph& h, const Graph& f) {
        if (h.empty() || f.empty()) throw DomainError("weight balancing needs nonempty H and F");
        (void)h.full_mask();
        m2_f_ = m2(f).value;
        m2_hf_ = m2_asym(h, f).value;
        target_ = 2 - 1 / m2_f_;

        std::vector<Vertex> verts;
        for (VertexSet s = h.support(); s; s &= s - 1) verts.push_back(std::countr_zero(s));
        const int k = static_cast<int>(verts.size());
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
            if (std::popcount(m) < 2) continue;
            VertexSet s = 0;
            for (std::uint64_t r = m; r; r &= r - 1) s |= bit(verts[static_cast<std::size_t>(std::countr_zero(r))]);
            bool isolated = false;
            for (VertexSet r = s; r && !isolated; r &= r - 1) isolated = (h.neighbours(std::countr_zero(r)) & s) == 0;
            if (isolated) continue;
            EdgeMask mask = 0;
            for (EdgeId id : h.induced_edge_ids(s)) mask |= EdgeMask{1} << id;
            constraints_.push_back({mask, std::popcount(m)});
        }
    }

    ResidualDetail residual(const WeightFunction& w, EdgeId e) const {
        const EdgeMask need = EdgeMask{1} << e;
        ResidualDetail best;
        bool first = true;
        Rational best_value;
        for (const Constraint& c : constraints_) {
            if (!(c.edges & need)) continue;
            Rational value = Rational(c.vertices) - w.sum(c.edges) / m2_hf_;
            bool better = first || value < best_value;
            if (!better && value == best_value) {
                int pc = std::popcount(c.edges), pb = std::popcount(best.minimizer);
                if (pc != pb) {
                    better = pc < pb;
                } else {
                    EdgeMask diff = c.edges ^ best.minimizer;
                    better = diff && (c.edges & (diff & (~diff + 1)));
                }
            }
            if (better) {
                best_value = value;
                best.minimizer = c.edges;
                first = false;
            }
        }
        best.residual = best_value - target_;
        return best;
    }

    const Rational& m2_hf() const { return m2_hf_; }
    const Rational& m2_f() const { return m2_f_; }

private:
    Rational m2_f_;
    Rational m2_hf_;
    Rational target_;
    std::vector<Constraint> constraints_;
};

void check_edge(const Graph& h, EdgeId e) {
    if (e >= h.size()) throw DomainError("edge id " + std::to_string(e) + " is not an edge of H");
}

} // namespace

ResidualDetail residual_detail(const Graph& h, const Graph& f, const WeightFunction& w, EdgeId e) {
    BalanceContext ctx(h, f);
    w.check_domain(h);
    check_edge(h, e);
    return ctx.residual(w, e);
}

Rational residual(const Graph& h, const Graph& f, const WeightFunction& w, EdgeId e) {
    return residual_detail(h, f, w, e).residual;
}

BalanceCertificate solve_balanced_weights(const Graph& h, const Graph& f) {
    BalanceContext ctx(h, f);
    std::vector<Rational> w(h.size(), Rational(1));
    for (EdgeId e = 0; e < h.size(); ++e) {
        Rational r = ctx.residual(WeightFunction(w), e).residual;
        if (r > 0) w[e] += ctx.m2_hf() * r;
    }

    BalanceCertificate cert;
    cert.weights = WeightFunction(std::move(w));
    cert.m2_asym = ctx.m2_hf();
    cert.m2_forbidden = ctx.m2_f();
    for (EdgeId e = 0; e < h.size(); ++e) {
        ResidualDetail d = ctx.residual(cert.weights, e);
        if (d.residual != 0)
            throw std::logic_error("weight solver left residual " + to_string(d.residual) + " on edge " +
                                   std::to_string(e));
        cert.residuals.push_back(d.residual);
        cert.tight.push_back(d.minimizer);
    }
    return cert;
}

bool verify_balanced(const Graph& h, const Graph& f, const WeightFunction& w) {
    BalanceContext ctx(h, f);
    w.check_domain(h);
    for (EdgeId e = 0; e < h.size(); ++e)
        if (ctx.residual(w, e).residual != 0) return false;
    return true;
}

} // namespace ramsey
