#include "ramsey/typed_random.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

namespace ramsey {

void TypedModelParams::validate() const {
    if (n < 0 || n > kMaxVertices) throw DomainError("n must lie in [0, 64]");
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1]");
    if (!pattern || pattern->empty()) throw DomainError("the type pattern H must have at least one edge");
    weights.check_domain(*pattern);
}

namespace {

std::vector<double> retention_probabilities(const TypedModelParams& params) {
    std::vector<double> keep;
    for (const Rational& w : params.weights.values())
        keep.push_back(std::min(params.p, std::pow(params.p, to_double(w))));
    return keep;
}

template <class OnPair>
void draw_pairs(const TypedModelParams& params, OnPair on_pair) {
    Rng rng(params.seed);
    const std::uint64_t types = params.pattern->size();
    for (int a = 0; a < params.n; ++a) {
        for (int b = a + 1; b < params.n; ++b) {
            const auto type = static_cast<EdgeId>(rng.below(types));
            const double u = rng.uniform();
            on_pair(a, b, type, u);
        }
    }
}

} // namespace

TypedGraph sample(const TypedModelParams& params) { return sample_coupled(params).typed; }

CoupledSample sample_coupled(const TypedModelParams& params) {
    params.validate();
    const std::vector<double> keep = retention_probabilities(params);
    std::vector<Edge> typed_edges;
    std::vector<EdgeId> types;
    std::vector<Edge> untyped_edges;
    draw_pairs(params, [&](int a, int b, EdgeId type, double u) {
        if (u < keep[type]) {
            typed_edges.push_back({a, b});
            types.push_back(type);
        }
        if (u < params.p) untyped_edges.push_back({a, b});
    });
    // Pairs are drawn in lexicographic order, so `types` is already in EdgeId order.
    return CoupledSample{TypedGraph(Graph(params.n, typed_edges), params.pattern, std::move(types)),
                         Graph(params.n, untyped_edges)};
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices) throw DomainError("n must lie in [0, 64]");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.uniform() < p) edges.push_back({a, b});
    return Graph(n, edges);
}

namespace {

using EdgeKey = int;
/// Host pair -> pattern EdgeId, sorted by host pair.
using TypeMap = std::vector<std::pair<EdgeKey, EdgeId>>;

EdgeKey key(Vertex a, Vertex b) { return a < b ? a * kMaxVertices + b : b * kMaxVertices + a; }

// Sum of terms coef * p^exponent, kept in double and, when every exponent
// is integral, exactly.
class Accumulator {
public:
    Accumulator(const Rational& p, bool exact) : p_(p), pd_(to_double(p)), exact_(exact) {}

    void add(const Rational& coef, const Rational& exponent) {
        value_ += to_double(coef) * std::pow(pd_, to_double(exponent));
        if (exact_) exact_sum_ += coef * power(exponent);
    }

    Moment result() const {
        Moment m;
        m.value = value_;
        if (exact_) m.exact = exact_sum_;
        return m;
    }

private:
    const Rational& power(const Rational& exponent) {
        const unsigned long k = exponent.get_num().get_ui();
        auto it = cache_.find(k);
        if (it == cache_.end()) it = cache_.emplace(k, pow(p_, k)).first;
        return it->second;
    }

    Rational p_;
    double pd_;
    bool exact_;
    double value_ = 0.0;
    Rational exact_sum_ = 0;
    std::map<unsigned long, Rational> cache_;
};

Rational inverse_power(std::size_t base, std::size_t k) { return 1 / pow(Rational(static_cast<long>(base)), k); }

// Edge maps C -> pattern induced by the isomorphisms between a copy and the
// typed pattern `sub` (edges labelled by their EdgeId in `h`).
std::vector<TypeMap> type_maps(const Graph& h, const Graph& sub, const std::vector<std::vector<Vertex>>& auts,
                               std::span<const Vertex> embedding) {
    std::vector<TypeMap> maps;
    maps.reserve(auts.size());
    for (const auto& alpha : auts) {
        TypeMap t;
        t.reserve(sub.size());
        for (const Edge& e : sub.edges())
            t.emplace_back(key(embedding[e.u], embedding[e.v]), h.id_of(alpha[e.u], alpha[e.v]));
        std::sort(t.begin(), t.end());
        maps.push_back(std::move(t));
    }
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    return maps;
}

// Adds scale * E[1_A 1_B] as a sum over compatible pairs of type maps.
void add_joint(Accumulator& acc, const std::vector<TypeMap>& ta, const std::vector<TypeMap>& tb, const WeightFunction& w,
               std::size_t types, const Rational& scale) {
    std::map<std::pair<std::size_t, Rational>, long> terms;
    for (const TypeMap& s : ta) {
        for (const TypeMap& t : tb) {
            std::size_t i = 0, j = 0, union_size = 0;
            Rational exponent = 0;
            bool ok = true;
            while (ok && (i < s.size() || j < t.size())) {
                if (j == t.size() || (i < s.size() && s[i].first < t[j].first)) {
                    exponent += w[s[i++].second];
                } else if (i == s.size() || t[j].first < s[i].first) {
                    exponent += w[t[j++].second];
                } else {
                    ok = s[i].second == t[j].second;
                    exponent += w[s[i].second];
                    ++i;
                    ++j;
                }
                ++union_size;
            }
            if (ok) ++terms[{union_size, exponent}];
        }
    }
    for (const auto& [term, count] : terms)
        acc.add(scale * Rational(count) * inverse_power(types, term.first), term.second);
}

bool shares_edge(const Copy& a, const Copy& b) {
    std::size_t i = 0, j = 0;
    while (i < a.edges.size() && j < b.edges.size()) {
        if (a.edges[i] == b.edges[j]) return true;
        if (a.edges[i] < b.edges[j]) ++i;
        else ++j;
    }
    return false;
}

Rational falling_factorial(int n, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

void check_subgraph(const Graph& h, EdgeMask mask) {
    if (h.empty()) throw DomainError("the pattern H must have at least one edge");
    if (mask == 0) throw DomainError("moments of an empty subgraph");
    if ((mask & ~h.full_mask()) != 0) throw DomainError("subgraph is not contained in the pattern");
}

void check_moment_args(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w) {
    check_subgraph(h, mask);
    w.check_domain(h);
    if (n < 0) throw DomainError("n must be nonnegative");
    if (p <= 0 || p > 1) throw DomainError("p must lie in (0, 1]");
}

} // namespace

Moment expected_typed_copies(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w) {
    check_moment_args(h, mask, n, p, w);
    const Graph sub = h.edge_subgraph(mask);
    const int v = popcount(sub.support());
    Accumulator acc(p, w.all_integer());
    if (n >= v) {
        const Rational coef = falling_factorial(n, v) / Rational(static_cast<long>(edge_fixing_automorphism_count(sub))) *
                              inverse_power(h.size(), sub.size());
        acc.add(coef, w.sum(mask));
    }
    return acc.result();
}

Moment exact_variance_typed_copies(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w) {
    check_moment_args(h, mask, n, p, w);
    const Graph sub = h.edge_subgraph(mask);
    const int v = popcount(sub.support());
    if (v > 6) throw LimitError("exact variance is limited to subgraphs with at most 6 vertices");
    Accumulator acc(p, w.all_integer());
    if (n < v) return acc.result();

    const auto auts = automorphisms(sub);
    // A0: the support of I mapped increasingly onto 0..v-1.
    std::vector<Vertex> base(static_cast<std::size_t>(h.order()), -1);
    {
        int next = 0;
        for (VertexSet s = sub.support(); s; s &= s - 1) base[static_cast<std::size_t>(std::countr_zero(s))] = next++;
    }
    const int m = std::min(n, 2 * v - 2 < v ? v : 2 * v - 2);
    const Graph host = graphs::complete(m);
    const std::vector<TypeMap> t0 = type_maps(h, sub, auts, base);
    Copy a0;
    for (const Edge& e : sub.edges()) a0.edges.push_back(host.id_of(base[e.u], base[e.v]));
    std::sort(a0.edges.begin(), a0.edges.end());

    const std::size_t types = h.size();
    const Rational copies_in_kn = falling_factorial(n, v) / Rational(static_cast<long>(auts.size()));
    const Rational single = inverse_power(types, sub.size());
    const Rational wi = w.sum(mask);

    for (const Copy& b : enumerate_copies(sub, host)) {
        if (!shares_edge(a0, b)) continue;
        VertexSet fresh = 0;
        for (Vertex x : b.embedding.map)
            if (x >= v) fresh |= bit(x);
        const int k = popcount(fresh);
        if (fresh != ((bit(v + k) - 1) & ~(bit(v) - 1))) continue;
        // Binomial(n - v, k) placements of the fresh vertices in K_n.
        Rational mult = falling_factorial(n - v, k);
        for (int i = 2; i <= k; ++i) mult /= i;
        const Rational scale = copies_in_kn * mult;

        const std::vector<TypeMap> tb = type_maps(h, sub, auts, b.embedding.map);
        add_joint(acc, t0, tb, w, types, scale);
        const Rational product = Rational(static_cast<long>(t0.size() * tb.size())) * single * single;
        acc.add(-scale * product, 2 * wi);
    }
    return acc.result();
}

UpperTailReport upper_tail_bound(const Graph& h, EdgeMask mask, int n, const Rational& p, const WeightFunction& w) {
    UpperTailReport report;
    report.mean = expected_typed_copies(h, mask, n, p, w);
    report.variance = exact_variance_typed_copies(h, mask, n, p, w);
    report.chebyshev = report.mean.value > 0 ? report.variance.value / (report.mean.value * report.mean.value)
                                             : std::numeric_limits<double>::infinity();

    const double log_n = std::log(static_cast<double>(n));
    const double log_p = std::log(to_double(p));
    std::vector<EdgeId> ids;
    for (EdgeMask r = mask; r; r &= r - 1) ids.push_back(static_cast<EdgeId>(std::countr_zero(r)));
    if (ids.size() > 24) throw LimitError("tail bound minimization is limited to 24 edges");
    double best = std::numeric_limits<double>::infinity();
    EdgeMask best_mask = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << ids.size()); ++m) {
        EdgeMask sub = 0;
        for (std::uint64_t r = m; r; r &= r - 1) sub |= EdgeMask{1} << ids[static_cast<std::size_t>(std::countr_zero(r))];
        const double value = popcount(h.vertices_of(sub)) * log_n + to_double(w.sum(sub)) * log_p;
        const double tol = 1e-12 * std::max(1.0, std::abs(value));
        bool better = value < best - tol;
        if (!better && std::abs(value - best) <= tol) {
            int pc = popcount(sub), pb = popcount(best_mask);
            EdgeMask diff = sub ^ best_mask;
            better = pc < pb || (pc == pb && (sub & (diff & (~diff + 1))));
        }
        if (better) {
            best = value;
            best_mask = sub;
        }
    }
    report.min_scale = std::exp(best);
    report.minimizer = best_mask;
    report.scale_bound = 1.0 / report.min_scale;
    return report;
}

std::vector<Copy> copies_in_complete_graph(const Graph& h, int n) { return enumerate_copies(h, graphs::complete(n)); }

std::vector<Copy> restrict_family(std::span<const Copy> family, const TypedGraph& g) {
    const Graph& h = g.pattern();
    const auto auts = automorphisms(h);
    std::vector<Copy> kept;
    for (const Copy& c : family) {
        const auto& phi = c.embedding.map;
        if (phi.size() != static_cast<std::size_t>(h.order())) throw DomainError("copy embedding does not match the pattern");
        for (Vertex x : phi)
            if (x >= g.graph().order()) throw DomainError("copy uses a vertex outside the typed graph's vertex set");
        bool present = std::all_of(h.edges().begin(), h.edges().end(),
                                   [&](const Edge& e) { return g.graph().has_edge(phi[e.u], phi[e.v]); });
        if (!present) continue;
        bool typed = std::any_of(auts.begin(), auts.end(), [&](const std::vector<Vertex>& alpha) {
            return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
                return g.type_of(phi[e.u], phi[e.v]) == h.id_of(alpha[e.u], alpha[e.v]);
            });
        });
        if (typed) kept.push_back(c);
    }
    return kept;
}

SuenReport suen_bound(const Graph& h, std::span<const Copy> family, int n, const Rational& p, const WeightFunction& w) {
    if (family.empty()) throw DomainError("Suen's bound needs a nonempty family of copies");
    check_moment_args(h, h.full_mask(), n, p, w);
    const auto auts = automorphisms(h);
    const std::size_t types = h.size();
    const bool exact = w.all_integer();

    // Key each copy by its host pairs so overlaps can be found per pair.
    std::vector<Copy> keyed;
    std::vector<std::vector<TypeMap>> maps;
    keyed.reserve(family.size());
    for (const Copy& c : family) {
        Copy k;
        k.embedding = c.embedding;
        for (const Edge& e : h.edges()) {
            Vertex a = c.embedding.map[e.u], b = c.embedding.map[e.v];
            if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("copy uses a vertex outside [n]");
            k.edges.push_back(static_cast<EdgeId>(key(a, b)));
        }
        std::sort(k.edges.begin(), k.edges.end());
        maps.push_back(type_maps(h, h, auts, c.embedding.map));
        keyed.push_back(std::move(k));
    }

    std::unordered_map<EdgeId, std::vector<std::size_t>> by_pair;
    for (std::size_t i = 0; i < keyed.size(); ++i)
        for (EdgeId e : keyed[i].edges) by_pair[e].push_back(i);

    SuenReport report;
    report.family_size = family.size();
    Accumulator mu(p, exact);
    Accumulator big_delta(p, exact);
    const Rational single = inverse_power(types, h.size());
    const Rational wh = w.sum(h.full_mask());
    std::size_t max_overlap = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        mu.add(Rational(static_cast<long>(maps[i].size())) * single, wh);
        std::vector<std::size_t> neighbours;
        for (EdgeId e : keyed[i].edges)
            neighbours.insert(neighbours.end(), by_pair[e].begin(), by_pair[e].end());
        std::sort(neighbours.begin(), neighbours.end());
        neighbours.erase(std::unique(neighbours.begin(), neighbours.end()), neighbours.end());
        max_overlap = std::max(max_overlap, neighbours.size());
        for (std::size_t j : neighbours)
            if (j > i) add_joint(big_delta, maps[i], maps[j], w, types, Rational(1));
    }
    // Every copy has |Aut(H)|/|Aut_e(H)| admissible type maps, so E[1_C] is
    // the same for all C and delta is (largest neighbourhood) * E[1_C].
    Accumulator small_delta(p, exact);
    small_delta.add(Rational(static_cast<long>(max_overlap * maps.front().size())) * single, wh);

    const Moment m = mu.result(), dd = big_delta.result(), sd = small_delta.result();
    report.mu = m.value;
    report.Delta = dd.value;
    report.delta = sd.value;
    report.mu_exact = m.exact;
    report.Delta_exact = dd.exact;
    report.delta_exact = sd.exact;

    double exponent = std::min(report.mu / (6.0 * report.delta), report.mu / 2.0);
    if (report.Delta > 0) exponent = std::min(exponent, report.mu * report.mu / (8.0 * report.Delta));
    report.bound = std::exp(-exponent);
    return report;
}

} // namespace ramsey
