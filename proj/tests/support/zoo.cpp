#include "zoo.hpp"

#include "ramsey/copies.hpp"
#include "ramsey/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace testing_support {

using namespace ramsey;

namespace {

// Invariant used to bucket isomorphism candidates: sorted degrees plus the
// sorted per-vertex triangle counts.
std::vector<int> invariant(const Graph& g) {
    std::vector<int> degrees, triangles;
    for (Vertex v = 0; v < g.order(); ++v) {
        degrees.push_back(g.degree(v));
        int t = 0;
        for (VertexSet r = g.neighbours(v); r; r &= r - 1) t += popcount(g.neighbours(std::countr_zero(r)) & g.neighbours(v));
        triangles.push_back(t);
    }
    std::sort(degrees.begin(), degrees.end());
    std::sort(triangles.begin(), triangles.end());
    degrees.insert(degrees.end(), triangles.begin(), triangles.end());
    return degrees;
}

// Plain permutation-based isomorphism test, independent of the library search.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges())
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

class ClassSet {
public:
    bool insert(const Graph& g) {
        auto& bucket = buckets_[{g.size(), invariant(g)}];
        for (const Graph& h : bucket)
            if (brute_isomorphic(g, h)) return false;
        bucket.push_back(g);
        return true;
    }

private:
    std::map<std::tuple<std::size_t, std::vector<int>>, std::vector<Graph>> buckets_;
};

} // namespace

std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> result;
    std::vector<Graph> level{Graph(n)};
    ClassSet seen;
    seen.insert(level.front());
    while (!level.empty()) {
        result.insert(result.end(), level.begin(), level.end());
        std::vector<Graph> next;
        for (const Graph& g : level)
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if (!g.has_edge(a, b)) {
                        Graph h = g.with_edge({a, b});
                        if (seen.insert(h)) next.push_back(std::move(h));
                    }
        level = std::move(next);
    }
    return result;
}

std::vector<Graph> all_nonempty_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (!g.empty()) out.push_back(g.without_isolated());
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (rng.uniform() < p) edges.push_back({a, b});
    return Graph(n, edges);
}

Graph random_nonempty_graph(int n, double p, std::uint64_t seed) {
    for (std::uint64_t k = 0;; ++k) {
        Graph g = random_graph(n, p, mix_seed(seed, {k}));
        if (!g.empty()) return g;
    }
}

namespace {

struct Best {
    std::int64_t num = -1;
    std::int64_t den = 1;
    void offer(std::int64_t n, std::int64_t d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (num < 0 || n * den > num * d) {
            num = n;
            den = d;
        }
    }
};

// Visits (edges, vertices) of every nonempty edge subset.
template <class Fn>
void for_each_subset(const Graph& g, Fn fn) {
    const std::size_t m = g.size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        VertexSet verts = 0;
        for (std::uint64_t r = s; r; r &= r - 1) {
            const Edge& e = g.edge(static_cast<EdgeId>(std::countr_zero(r)));
            verts |= bit(e.u) | bit(e.v);
        }
        fn(static_cast<std::int64_t>(std::popcount(s)), static_cast<std::int64_t>(popcount(verts)));
    }
}

} // namespace

Rational oracle_m2(const Graph& f) {
    Best best;
    for_each_subset(f, [&](std::int64_t e, std::int64_t v) {
        if (e == 1 && v == 2) best.offer(1, 2);
        else best.offer(e - 1, v - 2);
    });
    Rational r(best.num, best.den);
    r.canonicalize();
    return r;
}

Rational oracle_m2_asym(const Graph& f1, const Graph& f2) {
    const Rational m = oracle_m2(f2);
    const std::int64_t a = m.get_num().get_si(), b = m.get_den().get_si();
    // e / (v - 2 + b/a) = e a / ((v - 2) a + b)
    Best best;
    for_each_subset(f1, [&](std::int64_t e, std::int64_t v) { best.offer(e * a, (v - 2) * a + b); });
    Rational r(best.num, best.den);
    r.canonicalize();
    return r;
}

Rational oracle_max_density(const Graph& g) {
    Best best;
    for_each_subset(g, [&](std::int64_t e, std::int64_t v) { best.offer(e, v); });
    Rational r(best.num, best.den);
    r.canonicalize();
    return r;
}

bool oracle_arrows(const Graph& g, const std::vector<Graph>& targets) {
    const std::size_t r = targets.size();
    std::vector<std::vector<EdgeMask>> copies(r);
    for (std::size_t i = 0; i < r; ++i) {
        // Collect copies as edge masks through every monomorphism.
        std::vector<EdgeMask> masks;
        for_each_monomorphism(targets[i], g, [&](std::span<const Vertex> map) {
            EdgeMask mask = 0;
            for (const Edge& e : targets[i].edges()) mask |= EdgeMask{1} << g.id_of(map[e.u], map[e.v]);
            masks.push_back(mask);
            return true;
        });
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        copies[i] = std::move(masks);
    }
    const std::size_t m = g.size();
    std::vector<int> digits(m, 0);
    std::vector<EdgeMask> classes(r);
    for (;;) {
        std::fill(classes.begin(), classes.end(), 0);
        for (std::size_t e = 0; e < m; ++e) classes[static_cast<std::size_t>(digits[e])] |= EdgeMask{1} << e;
        bool mono = false;
        for (std::size_t i = 0; i < r && !mono; ++i)
            for (EdgeMask c : copies[i])
                if ((c & ~classes[i]) == 0) {
                    mono = true;
                    break;
                }
        if (!mono) return false;
        std::size_t k = 0;
        while (k < m && static_cast<std::size_t>(++digits[k]) == r) digits[k++] = 0;
        if (k == m) return true;
    }
}

} // namespace testing_support
