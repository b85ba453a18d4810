#include "ramsey/densities.hpp"

#include "ramsey/errors.hpp"

#include <bit>
#include <cstdint>

namespace ramsey {

namespace {

// Ratios of small integers; comparisons are exact via 128-bit products.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

__extension__ using Wide = __int128;

int compare(const Frac& a, const Frac& b) {
    Wide l = static_cast<Wide>(a.num) * b.den;
    Wide r = static_cast<Wide>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

void require_edges(const Graph& g, const char* what) {
    if (g.empty()) throw DomainError(std::string(what) + " of a graph without edges");
}

// Every vertex subset of the support whose induced subgraph has an edge
// and no isolated vertex is scored; ratio(e, v) must be positive.
template <class Ratio>
DensityReport maximize_over_induced(const Graph& g, Ratio ratio, const char* what) {
    require_edges(g, what);
    std::vector<Vertex> verts;
    for (VertexSet s = g.support(); s; s &= s - 1) verts.push_back(std::countr_zero(s));
    const int k = static_cast<int>(verts.size());
    if (k > kExhaustiveVertexLimit)
        throw LimitError(std::string(what) + ": " + std::to_string(k) + " non-isolated vertices exceed the exhaustive limit of " +
                         std::to_string(kExhaustiveVertexLimit));

    Frac best{0, 1};
    std::vector<VertexSet> argmax;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    for (std::uint64_t m = 1; m < subsets; ++m) {
        if (std::popcount(m) < 2) continue;
        VertexSet s = 0;
        for (std::uint64_t r = m; r; r &= r - 1) s |= bit(verts[static_cast<std::size_t>(std::countr_zero(r))]);
        bool isolated = false;
        for (VertexSet r = s; r && !isolated; r &= r - 1)
            isolated = (g.neighbours(std::countr_zero(r)) & s) == 0;
        if (isolated) continue;
        const auto e = static_cast<std::int64_t>(g.induced_edge_count(s));
        Frac value = ratio(e, static_cast<std::int64_t>(std::popcount(m)));
        int c = argmax.empty() ? 1 : compare(value, best);
        if (c > 0) {
            best = value;
            argmax.assign(1, s);
        } else if (c == 0) {
            argmax.push_back(s);
        }
    }

    DensityReport report;
    report.value = Rational(static_cast<long>(best.num), static_cast<unsigned long>(best.den));
    report.value.canonicalize();
    for (VertexSet s : argmax) {
        std::vector<Edge> edges;
        for (EdgeId id : g.induced_edge_ids(s)) edges.push_back(g.edge(id));
        report.maximizers.push_back(std::move(edges));
    }
    report.unique = report.maximizers.size() == 1;
    return report;
}

Frac d2_frac(std::int64_t e, std::int64_t v) { return v == 2 ? Frac{1, 2} : Frac{e - 1, v - 2}; }

// e / (v - 2 + b/a) = e a / ((v - 2) a + b) where m2(F2) = a/b.
auto asym_frac(const Rational& m2_f2) {
    if (m2_f2 <= 0) throw DomainError("m2(F2) must be positive");
    if (!m2_f2.get_num().fits_slong_p() || !m2_f2.get_den().fits_slong_p())
        throw LimitError("m2(F2) numerator/denominator too large");
    const std::int64_t a = m2_f2.get_num().get_si();
    const std::int64_t b = m2_f2.get_den().get_si();
    return [a, b](std::int64_t e, std::int64_t v) { return Frac{e * a, (v - 2) * a + b}; };
}

} // namespace

Rational d2(const Graph& f) {
    require_edges(f, "d2");
    const long v = popcount(f.support());
    const long e = static_cast<long>(f.size());
    if (v == 2) return Rational(1, 2);
    Rational q(e - 1, v - 2);
    q.canonicalize();
    return q;
}

DensityReport m2(const Graph& f) { return maximize_over_induced(f, d2_frac, "m2"); }

DensityReport m2_asym_given(const Graph& f1, const Rational& m2_f2) {
    return maximize_over_induced(f1, asym_frac(m2_f2), "m2(F1,F2)");
}

DensityReport m2_asym(const Graph& f1, const Graph& f2) {
    require_edges(f2, "m2(F1,F2)");
    const Rational m1 = m2(f1).value;
    const Rational m2f2 = m2(f2).value;
    if (m1 < m2f2)
        throw DensityOrderError("m2(F1) = " + to_string(m1) + " is smaller than m2(F2) = " + to_string(m2f2) +
                                "; swap the pair");
    return m2_asym_given(f1, m2f2);
}

Rational asym_ratio(std::size_t edges, int vertices, const Rational& m2_f2) {
    Rational denom = Rational(vertices - 2) + 1 / m2_f2;
    return Rational(static_cast<long>(edges)) / denom;
}

bool is_2_balanced(const Graph& f) { return d2(f) == m2(f).value; }

bool is_strictly_2_balanced(const Graph& f) {
    DensityReport r = m2(f);
    return r.unique && d2(f) == r.value;
}

bool is_strictly_balanced_wrt(const Graph& f1, const Graph& f2) {
    DensityReport r = m2_asym(f1, f2);
    const Rational whole = asym_ratio(f1.size(), popcount(f1.support()), m2(f2).value);
    return r.unique && whole == r.value;
}

DensityReport max_density(const Graph& g) {
    return maximize_over_induced(g, [](std::int64_t e, std::int64_t v) { return Frac{e, v}; }, "max_density");
}

} // namespace ramsey
