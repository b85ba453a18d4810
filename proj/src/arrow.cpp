#include "ramsey/arrow.hpp"

#include "colouring_solver.hpp"
#include "ramsey/copies.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"

#include <algorithm>
#include <limits>

namespace ramsey {

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::arrows: return "arrows";
    case Outcome::does_not_arrow: return "does_not_arrow";
    case Outcome::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

using CopyLists = std::vector<std::vector<std::vector<EdgeId>>>;

void check_targets(std::span<const Graph> targets, std::size_t min_count) {
    if (targets.size() < min_count || targets.size() > 6)
        throw DomainError("between 1 and 6 colours are supported");
    for (const Graph& f : targets)
        if (f.empty()) throw DomainError("arrow targets must have at least one edge");
}

std::vector<std::vector<EdgeId>> edge_lists(const std::vector<Copy>& copies) {
    std::vector<std::vector<EdgeId>> lists;
    lists.reserve(copies.size());
    for (const Copy& c : copies) lists.push_back(c.edges);
    return lists;
}

ArrowResult decide(std::size_t edges, const CopyLists& copies, int deferred_colour, std::uint64_t budget) {
    ArrowResult result;
    result.budget = budget;
    const int r = static_cast<int>(copies.size());
    for (const auto& list : copies) result.stats.copies_per_colour.push_back(list.size());

    // A colour without constraints absorbs every edge.
    for (int c = 0; c < r; ++c) {
        if (copies[static_cast<std::size_t>(c)].empty()) {
            result.outcome = Outcome::does_not_arrow;
            result.certificate = Colouring(edges, c + 1);
            return result;
        }
    }

    // Edges in no copy are fixed to colour 1 and left out of the search.
    std::vector<double> incidence(edges, 0.0);
    for (const auto& list : copies)
        for (const auto& copy : list)
            for (EdgeId e : copy) incidence[e] += 1.0;
    std::vector<std::size_t> compact(edges, std::numeric_limits<std::size_t>::max());
    std::vector<EdgeId> original;
    for (EdgeId e = 0; e < edges; ++e) {
        if (incidence[e] > 0) {
            compact[e] = original.size();
            original.push_back(e);
        }
    }

    detail::ColouringProblem problem;
    problem.edges = original.size();
    problem.colours = r;
    problem.deferred_colour = deferred_colour;
    for (EdgeId e : original) problem.priority.push_back(incidence[e]);
    problem.forbidden.resize(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
        for (const auto& copy : copies[static_cast<std::size_t>(c)]) {
            std::vector<std::size_t> set;
            for (EdgeId e : copy) set.push_back(compact[e]);
            problem.forbidden[static_cast<std::size_t>(c)].push_back(std::move(set));
        }
    }

    const detail::ColouringSearch search = detail::solve_colouring(problem, budget);
    result.stats.nodes = search.decisions;
    result.stats.conflicts = search.conflicts;
    switch (search.status) {
    case detail::ColouringSearch::Status::satisfiable: {
        Colouring colouring(edges, 1);
        for (std::size_t i = 0; i < original.size(); ++i) colouring[original[i]] = search.colouring[i] + 1;
        result.outcome = Outcome::does_not_arrow;
        result.certificate = std::move(colouring);
        break;
    }
    case detail::ColouringSearch::Status::unsatisfiable: result.outcome = Outcome::arrows; break;
    case detail::ColouringSearch::Status::budget_exhausted: result.outcome = Outcome::indeterminate; break;
    }
    return result;
}

void check_colouring(const Graph& g, std::size_t colours, const Colouring& colouring) {
    if (colouring.size() != g.size())
        throw DomainError("colouring has " + std::to_string(colouring.size()) + " entries for " +
                          std::to_string(g.size()) + " edges");
    for (int c : colouring)
        if (c < 1 || static_cast<std::size_t>(c) > colours)
            throw DomainError("colour " + std::to_string(c) + " is out of range");
}

Graph colour_class(const Graph& g, const Colouring& colouring, int colour) {
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.size(); ++e)
        if (colouring[e] == colour) edges.push_back(g.edge(e));
    return Graph(g.order(), edges);
}

} // namespace

ArrowResult arrow_decide(const Graph& g, std::span<const Graph> targets, std::uint64_t budget) {
    check_targets(targets, 1);
    CopyLists copies;
    for (const Graph& f : targets) copies.push_back(edge_lists(enumerate_copies(f, g)));
    return decide(g.size(), copies, -1, budget);
}

ArrowResult typed_arrow_decide(const TypedGraph& g, std::span<const Graph> others, std::uint64_t budget) {
    if (g.pattern().empty()) throw DomainError("the type pattern H must have at least one edge");
    check_targets(others, 0);
    if (others.size() > 5) throw DomainError("between 1 and 6 colours are supported");
    CopyLists copies;
    copies.push_back(edge_lists(typed_copies(g.pattern().full_mask(), g)));
    for (const Graph& f : others) copies.push_back(edge_lists(enumerate_copies(f, g.graph())));
    return decide(g.graph().size(), copies, others.empty() ? -1 : 0, budget);
}

bool verify_non_arrow(const Graph& g, std::span<const Graph> targets, const Colouring& colouring) {
    check_colouring(g, targets.size(), colouring);
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (count_monomorphisms(targets[i], colour_class(g, colouring, static_cast<int>(i) + 1)) != 0) return false;
    return true;
}

bool verify_typed_non_arrow(const TypedGraph& g, std::span<const Graph> others, const Colouring& colouring) {
    check_colouring(g.graph(), others.size() + 1, colouring);
    std::vector<Edge> edges;
    std::vector<EdgeId> types;
    for (EdgeId e = 0; e < g.graph().size(); ++e) {
        if (colouring[e] == 1) {
            edges.push_back(g.graph().edge(e));
            types.push_back(g.type(e));
        }
    }
    const TypedGraph first(Graph(g.graph().order(), edges), g.pattern_ptr(), std::move(types));
    if (count_typed_copies(g.pattern().full_mask(), first) != 0) return false;
    for (std::size_t i = 0; i < others.size(); ++i)
        if (count_monomorphisms(others[i], colour_class(g.graph(), colouring, static_cast<int>(i) + 2)) != 0)
            return false;
    return true;
}

namespace {

Colouring recolour_uncovered(const std::vector<Copy>& copies, Colouring colouring) {
    std::vector<bool> covered(colouring.size(), false);
    for (const Copy& c : copies)
        for (EdgeId e : c.edges) covered[e] = true;
    for (std::size_t e = 0; e < colouring.size(); ++e)
        if (!covered[e]) colouring[e] = 1;
    return colouring;
}

} // namespace

Colouring normalize_colouring(const Graph& g, const Graph& f1, const Colouring& colouring) {
    check_colouring(g, std::numeric_limits<std::size_t>::max(), colouring);
    if (f1.empty()) throw DomainError("F1 must have at least one edge");
    return recolour_uncovered(enumerate_copies(f1, g), colouring);
}

Colouring normalize_typed_colouring(const TypedGraph& g, const Colouring& colouring) {
    check_colouring(g.graph(), std::numeric_limits<std::size_t>::max(), colouring);
    if (g.pattern().empty()) throw DomainError("the type pattern H must have at least one edge");
    return recolour_uncovered(typed_copies(g.pattern().full_mask(), g), colouring);
}

MonoCopiesResult min_mono_copies(int n, std::span<const Graph> targets, std::uint64_t cap,
                                 std::optional<SamplingOptions> sampling) {
    check_targets(targets, 1);
    if (n < 0) throw DomainError("n must be non-negative");
    const Graph host = graphs::complete(n);
    if (host.size() > 64) throw LimitError("min_mono_copies supports at most 64 host edges (n <= 11)");
    const std::size_t m = host.size();
    const std::size_t r = targets.size();

    std::vector<std::vector<EdgeMask>> copies(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (const Copy& c : enumerate_copies(targets[i], host)) {
            EdgeMask mask = 0;
            for (EdgeId e : c.edges) mask |= EdgeMask{1} << e;
            copies[i].push_back(mask);
        }
    }

    bool fits = true;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < m && fits; ++k) {
        if (total > cap / r) fits = false;
        else total *= r;
    }
    if (!fits && !sampling)
        throw LimitError("r^C(n,2) colourings exceed the enumeration cap; request sampling instead");

    MonoCopiesResult best;
    best.exhaustive = fits;
    best.min_max = std::numeric_limits<std::size_t>::max();
    best.min_total = std::numeric_limits<std::size_t>::max();
    std::vector<EdgeMask> classes(r, 0);
    std::vector<std::size_t> counts(r, 0);

    const auto evaluate = [&](const std::vector<int>& digits) {
        std::fill(classes.begin(), classes.end(), EdgeMask{0});
        for (std::size_t e = 0; e < m; ++e) classes[static_cast<std::size_t>(digits[e])] |= EdgeMask{1} << e;
        std::size_t sum = 0, worst = 0;
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t count = 0;
            for (EdgeMask copy : copies[i]) count += (copy & ~classes[i]) == 0;
            counts[i] = count;
            sum += count;
            worst = std::max(worst, count);
        }
        best.min_max = std::min(best.min_max, worst);
        if (sum < best.min_total) {
            best.min_total = sum;
            best.counts = counts;
            best.colouring.assign(digits.begin(), digits.end());
            for (int& c : best.colouring) ++c;
        }
        ++best.colourings_examined;
    };

    std::vector<int> digits(m, 0);
    if (fits) {
        for (;;) {
            evaluate(digits);
            std::size_t k = 0;
            while (k < m && static_cast<std::size_t>(++digits[k]) == r) digits[k++] = 0;
            if (k == m) break;
        }
    } else {
        Rng rng(sampling->seed);
        for (std::uint64_t s = 0; s < std::max<std::uint64_t>(1, sampling->samples); ++s) {
            for (int& d : digits) d = static_cast<int>(rng.below(r));
            evaluate(digits);
        }
    }
    return best;
}

} // namespace ramsey
