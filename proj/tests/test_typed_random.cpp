#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/copies.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/typed_random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

using namespace ramsey;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Typed copies of the pattern subgraph `mask`: edge sets reached by some
// injective vertex map sending each pattern edge to a host edge of that type.
std::size_t brute_typed_count(const Graph& h, EdgeMask mask, int n, const std::vector<int>& slot) {
    // slot[pair index] = -1 if absent, else the type.
    auto pair_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    };
    std::vector<Vertex> pv;
    for (VertexSet s = h.vertices_of(mask); s; s &= s - 1) pv.push_back(std::countr_zero(s));
    std::vector<Vertex> image(static_cast<std::size_t>(h.order()), -1);
    std::set<std::vector<int>> seen;
    // Every ordered choice of |pv| distinct host vertices.
    auto rec = [&](auto& self, std::size_t i, unsigned used) -> void {
        if (i == pv.size()) {
            std::vector<int> edges;
            for (EdgeMask r = mask; r; r &= r - 1) {
                const EdgeId e = static_cast<EdgeId>(std::countr_zero(r));
                const int idx = pair_index(image[h.edge(e).u], image[h.edge(e).v]);
                if (slot[idx] != static_cast<int>(e)) return;
                edges.push_back(idx);
            }
            std::sort(edges.begin(), edges.end());
            seen.insert(edges);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1U << v)) continue;
            image[pv[i]] = v;
            self(self, i + 1, used | (1U << v));
        }
    };
    rec(rec, 0, 0);
    return seen.size();
}

struct ExactMoments {
    Rational mean;
    Rational variance;
};

// Enumerates every outcome of the model on n vertices.
ExactMoments enumerate_moments(const Graph& h, EdgeMask mask, int n, const Rational& p, const std::vector<long>& w) {
    const int pairs = n * (n - 1) / 2;
    const long types = static_cast<long>(h.size());
    std::vector<Rational> present(h.size());
    Rational absent = 1;
    for (std::size_t t = 0; t < h.size(); ++t) {
        present[t] = pow(p, static_cast<unsigned long>(w[t])) / types;
        absent -= present[t];
    }
    std::vector<int> slot(static_cast<std::size_t>(pairs), -1);
    Rational m1 = 0, m2 = 0;
    for (;;) {
        Rational prob = 1;
        for (int s : slot) prob *= s < 0 ? absent : present[static_cast<std::size_t>(s)];
        if (prob != 0) {
            const auto x = static_cast<long>(brute_typed_count(h, mask, n, slot));
            m1 += prob * x;
            m2 += prob * x * x;
        }
        int k = 0;
        while (k < pairs && ++slot[static_cast<std::size_t>(k)] == static_cast<int>(types)) slot[static_cast<std::size_t>(k++)] = -1;
        if (k == pairs) break;
    }
    return {m1, m2 - m1 * m1};
}

TypedModelParams params(int n, double p, Graph h, std::uint64_t seed) {
    TypedModelParams prm;
    prm.n = n;
    prm.p = p;
    prm.weights = WeightFunction::uniform(h.size());
    prm.pattern = share(std::move(h));
    prm.seed = seed;
    return prm;
}

} // namespace

TEST_CASE("seed mixing is iterative and deterministic") {
    CHECK(mix_seed(7, {1, 2}) == mix_seed(mix_seed(7, {1}), {2}));
    CHECK(mix_seed(7, {1, 2}) != mix_seed(7, {2, 1}));
    Rng a(5), b(5);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(9);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(r.below(7) < 7);
    }
}

TEST_CASE("sampling is deterministic under a seed") {
    const auto prm = params(20, 0.4, graphs::complete(3), 42);
    CHECK(sample(prm) == sample(prm));
    auto other = prm;
    other.seed = 43;
    CHECK_FALSE(sample(prm) == sample(other));
}

TEST_CASE("parameters are validated") {
    auto prm = params(5, 0.0, graphs::complete(3), 0);
    CHECK_THROWS_AS(sample(prm), DomainError);
    prm.p = 1.5;
    CHECK_THROWS_AS(sample(prm), DomainError);
    prm.p = 0.5;
    prm.weights = WeightFunction::uniform(2);
    CHECK_THROWS_AS(sample(prm), DomainError);
    prm = params(65, 0.5, graphs::complete(3), 0);
    CHECK_THROWS_AS(sample(prm), DomainError);
}

TEST_CASE("the typed sample is an edge subset of the coupled binomial sample") {
    const Graph h(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto prm = params(18, 0.35, h, 0);
    prm.weights = WeightFunction({Rational(1), q(3, 2), Rational(2), Rational(1)});
    for (std::uint64_t s = 0; s < 200; ++s) {
        prm.seed = s;
        const auto c = sample_coupled(prm);
        for (const Edge& e : c.typed.graph().edges()) CHECK(c.untyped.has_edge(e.u, e.v));
        CHECK(c.typed == sample(prm));
    }
}

TEST_CASE("p close to one keeps almost every pair") {
    auto prm = params(12, 1.0 - 1e-9, graphs::complete(3), 3);
    CHECK(sample(prm).graph().size() == 66);
    CHECK(sample_gnp(10, 1.0, 1).size() == 45);
    CHECK(sample_gnp(10, 0.0, 1).size() == 0);
}

TEST_CASE("edge types are uniform over the pattern") {
    auto prm = params(40, 0.9, graphs::complete(4), 0);
    std::vector<double> counts(6, 0.0);
    double total = 0;
    for (std::uint64_t s = 0; s < 200; ++s) {
        prm.seed = s;
        for (EdgeId t : sample(prm).types()) {
            counts[t] += 1;
            total += 1;
        }
    }
    for (double c : counts) {
        const double sd = std::sqrt(total * (1.0 / 6) * (5.0 / 6));
        CHECK(std::abs(c - total / 6) < 4 * sd);
    }
}

TEST_CASE("closed-form expectations") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction::uniform(3);
    CHECK(*expected_typed_copies(k3, 0b111, 3, 1, w).exact == q(2, 9));
    CHECK(*exact_variance_typed_copies(k3, 0b111, 3, 1, w).exact == q(2, 9) * q(7, 9));
    // One edge: n(n-1) p / (2 e_H).
    CHECK(*expected_typed_copies(k3, 0b001, 10, q(1, 4), w).exact == q(90, 24));
    CHECK(std::abs(expected_typed_copies(k3, 0b111, 30, q(3, 10), w).value - 24360.0 * 0.027 / 27) < 1e-9);
    CHECK_THROWS_AS(expected_typed_copies(k3, 0, 5, q(1, 2), w), DomainError);
    CHECK_THROWS_AS(expected_typed_copies(k3, 0b1000, 5, q(1, 2), w), DomainError);
}

TEST_CASE("single-edge variance is a sum of independent indicators") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction({Rational(1), Rational(2), Rational(1)});
    const Rational p = q(2, 5);
    const Rational hit = p * p / 3;  // edge 1 has weight 2
    const int n = 9;
    CHECK(*exact_variance_typed_copies(k3, 0b010, n, p, w).exact == Rational(n * (n - 1) / 2) * hit * (1 - hit));
}

TEST_CASE("moments match full outcome enumeration") {
    struct Case {
        Graph h;
        EdgeMask mask;
        int n;
        std::vector<long> w;
    };
    const std::vector<Case> cases{
        {graphs::complete(3), 0b111, 4, {1, 1, 1}},
        {graphs::complete(3), 0b011, 4, {1, 1, 1}},
        {graphs::complete(3), 0b101, 4, {1, 2, 1}},
        {graphs::complete(3), 0b111, 4, {2, 1, 3}},
        {graphs::path(2), 0b11, 5, {1, 2}},
        {graphs::star(3), 0b011, 4, {1, 1, 2}},
        {graphs::matching(2), 0b11, 4, {1, 1}},
    };
    const Rational p = q(1, 2);
    for (const Case& c : cases) {
        std::vector<Rational> wr;
        for (long x : c.w) wr.emplace_back(x);
        const WeightFunction w(wr);
        const ExactMoments truth = enumerate_moments(c.h, c.mask, c.n, p, c.w);
        CHECK(*expected_typed_copies(c.h, c.mask, c.n, p, w).exact == truth.mean);
        CHECK(*exact_variance_typed_copies(c.h, c.mask, c.n, p, w).exact == truth.variance);
    }
}

TEST_CASE("fractional weights give floating-point moments only") {
    const Graph k3 = graphs::complete(3);
    const WeightFunction w({Rational(1), q(3, 2), Rational(1)});
    const Moment m = expected_typed_copies(k3, 0b111, 10, q(1, 2), w);
    CHECK_FALSE(m.exact.has_value());
    CHECK(m.value == doctest::Approx(720.0 * std::pow(0.5, 3.5) / 27));
}

TEST_CASE("variance guard") {
    const Graph k7 = graphs::complete(7);
    const auto w = WeightFunction::uniform(k7.size());
    CHECK_THROWS_AS(exact_variance_typed_copies(k7, k7.full_mask(), 10, q(1, 2), w), LimitError);
}

TEST_CASE("relative variance shrinks as n grows") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction::uniform(3);
    double prev = 1e300;
    for (int n : {10, 20, 40, 60}) {
        const auto r = upper_tail_bound(k3, 0b111, n, q(3, 10), w);
        CHECK(r.chebyshev < prev);
        prev = r.chebyshev;
    }
}

TEST_CASE("upper-tail scale minimizer") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction::uniform(3);
    // At p = n^{-1/2} the edge and the triangle tie; fewer edges wins.
    const auto r = upper_tail_bound(k3, 0b111, 100, q(1, 10), w);
    CHECK(std::popcount(r.minimizer) == 1);
    CHECK(r.scale_bound == doctest::Approx(1.0 / 1000.0));
    // Larger n at fixed p lowers the bound.
    CHECK(upper_tail_bound(k3, 0b111, 20, q(3, 10), w).scale_bound <
          upper_tail_bound(k3, 0b111, 10, q(3, 10), w).scale_bound);
}

TEST_CASE("restricting the triangle family") {
    auto k3 = share(graphs::complete(3));
    const auto family = copies_in_complete_graph(*k3, 5);
    CHECK(family.size() == 10);
    const TypedGraph empty(Graph(5), k3, {});
    CHECK(restrict_family(family, empty).empty());

    // A rainbow triangle on {0,1,2} and a two-coloured one on {2,3,4}.
    const TypedGraph g(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}), k3, {0, 1, 2, 0, 0, 1});
    const auto kept = restrict_family(family, g);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].edges.size() == 3);
    CHECK(kept.size() <= count_typed_copies(k3->full_mask(), g));

    const TypedGraph small(Graph(3, {{0, 1}}), k3, {0});
    CHECK_THROWS_AS(restrict_family(family, small), DomainError);
}

TEST_CASE("Suen quantities for the triangle family") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction::uniform(3);
    for (int n : {5, 8, 11}) {
        const Rational p = q(3, 10);
        const auto family = copies_in_complete_graph(k3, n);
        const SuenReport r = suen_bound(k3, family, n, p, w);
        // Rainbow probability 6/27; two rainbow triangles on a shared edge
        // agree on it in 3 * 2 * 2 of 3^5 assignments.
        const Rational single = q(2, 9) * pow(p, 3);
        const Rational pair = q(12, 243) * pow(p, 5);
        const long tri = n * (n - 1) * (n - 2) / 6;
        const long overlapping = (n * (n - 1) / 2) * ((n - 2) * (n - 3) / 2);
        CHECK(*r.mu_exact == single * tri);
        CHECK(*r.Delta_exact == pair * overlapping);
        CHECK(*r.delta_exact == single * (1 + 3 * (n - 3)));
        const double mu = to_double(*r.mu_exact), D = to_double(*r.Delta_exact), d = to_double(*r.delta_exact);
        CHECK(r.bound == doctest::Approx(std::exp(-std::min({mu * mu / (8 * D), mu / (6 * d), mu / 2}))));
    }
}

TEST_CASE("a single-copy family drops the overlap term") {
    const Graph k3 = graphs::complete(3);
    const auto w = WeightFunction::uniform(3);
    const auto family = copies_in_complete_graph(k3, 3);
    const SuenReport r = suen_bound(k3, family, 3, q(1, 2), w);
    CHECK(*r.Delta_exact == 0);
    const double mu = to_double(*r.mu_exact);
    CHECK(r.bound == doctest::Approx(std::exp(-std::min(mu / 6 / mu, mu / 2))));
    CHECK_THROWS_AS(suen_bound(k3, {}, 3, q(1, 2), w), DomainError);
}

TEST_CASE("edge-disjoint indicators are uncorrelated") {
    auto prm = params(6, 0.6, graphs::complete(3), 0);
    auto k3 = prm.pattern;
    const auto family = copies_in_complete_graph(*k3, 6);
    // Triangles {0,1,2} and {3,4,5} share no edge.
    const int trials = 40000;
    double a = 0, b = 0, ab = 0;
    for (int t = 0; t < trials; ++t) {
        prm.seed = mix_seed(99, {static_cast<std::uint64_t>(t)});
        const TypedGraph g = sample(prm);
        bool in_a = false, in_b = false;
        for (const Copy& c : restrict_family(family, g)) {
            VertexSet vs = 0;
            for (Vertex v : c.embedding.map) vs |= bit(v);
            in_a = in_a || vs == 0b000111;
            in_b = in_b || vs == 0b111000;
        }
        a += in_a;
        b += in_b;
        ab += in_a && in_b;
    }
    const double pa = a / trials, pb = b / trials, pab = ab / trials;
    const double sd = std::sqrt(pa * pb * (1 - pa * pb) / trials);
    CHECK(std::abs(pab - pa * pb) < 4 * sd + 1e-3);
}
