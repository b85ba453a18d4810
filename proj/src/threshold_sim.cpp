#include "ramsey/threshold_sim.hpp"

#include "ramsey/densities.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/typed_random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace ramsey {

WilsonInterval wilson_interval(std::size_t successes, std::size_t n, double z) {
    if (n == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::clamp(std::min(centre - half, phat), 0.0, 1.0), std::clamp(std::max(centre + half, phat), 0.0, 1.0)};
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

void finish(SweepCell& cell) {
    const std::size_t decided = cell.arrows + cell.non_arrows;
    cell.p_hat = decided ? static_cast<double>(cell.arrows) / static_cast<double>(decided) : 0.0;
    cell.wilson = wilson_interval(cell.arrows, decided);
    cell.unusable = static_cast<double>(cell.indeterminate) > 0.02 * static_cast<double>(cell.trials);
}

void tally(Outcome o, std::size_t& arrows, std::size_t& non_arrows, std::size_t& indeterminate) {
    switch (o) {
    case Outcome::arrows: ++arrows; break;
    case Outcome::does_not_arrow: ++non_arrows; break;
    case Outcome::indeterminate: ++indeterminate; break;
    }
}

void check_targets(const std::vector<Graph>& targets) {
    if (targets.empty()) throw DomainError("at least one target is required");
    for (const Graph& f : targets)
        if (f.empty()) throw DomainError("arrow targets must have at least one edge");
}

struct TypedSetup {
    std::shared_ptr<const Graph> pattern;
    WeightFunction weights;
    std::vector<Graph> others;
    std::vector<Graph> untyped_targets;
};

// Index of the target with the largest m2; ties go to the first.
std::size_t densest(const std::vector<Graph>& targets) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < targets.size(); ++i)
        if (m2(targets[i]).value > m2(targets[best]).value) best = i;
    return best;
}

TypedSetup typed_setup(const SweepSpec& spec) {
    TypedSetup s;
    const std::size_t first = densest(spec.targets);
    for (std::size_t i = 0; i < spec.targets.size(); ++i)
        if (i != first) s.others.push_back(spec.targets[i]);
    s.pattern = std::make_shared<const Graph>(spec.pattern ? *spec.pattern : spec.targets[first]);
    if (spec.weights) {
        spec.weights->check_domain(*s.pattern);
        s.weights = *spec.weights;
    } else {
        s.weights = solve_balanced_weights(*s.pattern, s.others[densest(s.others)]).weights;
    }
    s.untyped_targets.push_back(*s.pattern);
    s.untyped_targets.insert(s.untyped_targets.end(), s.others.begin(), s.others.end());
    return s;
}

struct Grid {
    std::vector<SweepCell> cells;
    double exponent = 0.0;
};

Grid make_grid(const SweepSpec& spec, const std::vector<Graph>& exponent_targets) {
    Grid grid;
    grid.exponent = 1.0 / to_double(threshold_density(exponent_targets));
    for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
        for (std::size_t j = 0; j < spec.C_values.size(); ++j) {
            SweepCell cell;
            cell.n = spec.n_values[i];
            cell.C = spec.C_values[j];
            double p = cell.C * std::pow(static_cast<double>(cell.n), -grid.exponent);
            if (p >= 1.0) {
                p = 1.0;
                cell.clamped = true;
            }
            cell.p = p;
            cell.trials = spec.trials;
            cell.seed = mix_seed(spec.seed, {i, j});
            grid.cells.push_back(cell);
        }
    }
    return grid;
}

} // namespace

SweepCell estimate_arrow_probability(int n, double p, const std::vector<Graph>& targets, std::size_t trials,
                                     std::uint64_t seed, std::uint64_t budget, unsigned jobs) {
    check_targets(targets);
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1]");
    if (n < 0 || n > kMaxVertices) throw DomainError("n must lie in [0, 64]");
    SweepCell cell;
    cell.n = n;
    cell.p = p;
    cell.trials = trials;
    cell.seed = seed;
    std::vector<Outcome> outcomes(trials);
    parallel_for(trials, jobs, [&](std::size_t t) {
        outcomes[t] = arrow_decide(sample_gnp(n, p, mix_seed(seed, {t})), targets, budget).outcome;
    });
    for (Outcome o : outcomes) tally(o, cell.arrows, cell.non_arrows, cell.indeterminate);
    finish(cell);
    return cell;
}

void SweepSpec::validate() const {
    if (targets.size() < 2) throw DomainError("a sweep needs at least two targets");
    check_targets(targets);
    if (n_values.empty() || C_values.empty()) throw DomainError("the n and C grids must be nonempty");
    for (int n : n_values)
        if (n < 1 || n > kMaxVertices) throw DomainError("n must lie in [1, 64]");
    for (double c : C_values)
        if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("every C must be positive");
    if (trials == 0) throw DomainError("trials must be at least 1");
}

Rational threshold_density(const std::vector<Graph>& targets) {
    if (targets.size() < 2) throw DomainError("the threshold density needs two targets");
    std::vector<std::pair<Rational, std::size_t>> order;
    for (std::size_t i = 0; i < targets.size(); ++i) order.emplace_back(m2(targets[i]).value, i);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return m2_asym(targets[order[0].second], targets[order[1].second]).value;
}

std::vector<SweepCell> sweep(const SweepSpec& spec) {
    spec.validate();
    Grid grid = make_grid(spec, spec.targets);
    const std::size_t per_cell = spec.trials;
    std::vector<Outcome> outcomes(grid.cells.size() * per_cell);
    parallel_for(outcomes.size(), spec.jobs, [&](std::size_t k) {
        const SweepCell& cell = grid.cells[k / per_cell];
        const Graph g = sample_gnp(cell.n, cell.p, mix_seed(cell.seed, {k % per_cell}));
        outcomes[k] = arrow_decide(g, spec.targets, spec.budget).outcome;
    });
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        SweepCell& cell = grid.cells[c];
        for (std::size_t t = 0; t < per_cell; ++t)
            tally(outcomes[c * per_cell + t], cell.arrows, cell.non_arrows, cell.indeterminate);
        finish(cell);
    }
    return grid.cells;
}

std::vector<SweepCell> typed_sweep(const SweepSpec& spec) {
    spec.validate();
    const TypedSetup setup = typed_setup(spec);
    Grid grid = make_grid(spec, setup.untyped_targets);
    const std::size_t per_cell = spec.trials;

    struct Trial {
        Outcome typed = Outcome::indeterminate;
        Outcome untyped = Outcome::indeterminate;
        bool violation = false;
    };
    std::vector<Trial> trials(grid.cells.size() * per_cell);
    parallel_for(trials.size(), spec.jobs, [&](std::size_t k) {
        const SweepCell& cell = grid.cells[k / per_cell];
        TypedModelParams params;
        params.n = cell.n;
        params.p = cell.p;
        params.pattern = setup.pattern;
        params.weights = setup.weights;
        params.seed = mix_seed(cell.seed, {k % per_cell});
        const CoupledSample s = sample_coupled(params);
        Trial& t = trials[k];
        t.typed = typed_arrow_decide(s.typed, setup.others, spec.budget).outcome;
        t.untyped = arrow_decide(s.untyped, setup.untyped_targets, spec.budget).outcome;
        const Graph& tg = s.typed.graph();
        t.violation = std::any_of(tg.edges().begin(), tg.edges().end(),
                                  [&](const Edge& e) { return !s.untyped.has_edge(e.u, e.v); }) ||
                      (t.untyped == Outcome::does_not_arrow && t.typed == Outcome::arrows);
    });
    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        SweepCell& cell = grid.cells[c];
        for (std::size_t i = 0; i < per_cell; ++i) {
            const Trial& t = trials[c * per_cell + i];
            tally(t.typed, cell.arrows, cell.non_arrows, cell.indeterminate);
            tally(t.untyped, cell.untyped_arrows, cell.untyped_non_arrows, cell.untyped_indeterminate);
            cell.coupling_violations += t.violation;
        }
        finish(cell);
    }
    return grid.cells;
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace

std::string to_csv(const std::vector<SweepCell>& cells) {
    std::ostringstream out;
    out << "n,C,p,trials,arrows,non_arrows,indeterminate,p_hat,wilson_lo,wilson_hi,seed\n";
    for (const SweepCell& c : cells) {
        out << c.n << ',' << fmt(c.C) << ',' << fmt(c.p) << ',' << c.trials << ',' << c.arrows << ','
            << c.non_arrows << ',' << c.indeterminate << ',' << fmt(c.p_hat) << ',' << fmt(c.wilson.lo) << ','
            << fmt(c.wilson.hi) << ',' << c.seed << '\n';
    }
    return out.str();
}

json to_json(const SweepCell& c) {
    return json{{"n", c.n},
                {"C", c.C},
                {"p", c.p},
                {"trials", c.trials},
                {"arrows", c.arrows},
                {"non_arrows", c.non_arrows},
                {"indeterminate", c.indeterminate},
                {"p_hat", c.p_hat},
                {"wilson_lo", c.wilson.lo},
                {"wilson_hi", c.wilson.hi},
                {"seed", c.seed},
                {"clamped", c.clamped},
                {"unusable", c.unusable},
                {"untyped_arrows", c.untyped_arrows},
                {"untyped_non_arrows", c.untyped_non_arrows},
                {"untyped_indeterminate", c.untyped_indeterminate},
                {"coupling_violations", c.coupling_violations}};
}

json to_json(const std::vector<SweepCell>& cells) {
    json arr = json::array();
    for (const SweepCell& c : cells) arr.push_back(to_json(c));
    return arr;
}

std::optional<double> crossing_point(const std::vector<SweepCell>& cells, int n) {
    std::vector<const SweepCell*> row;
    for (const SweepCell& c : cells)
        if (c.n == n) row.push_back(&c);
    std::stable_sort(row.begin(), row.end(), [](const SweepCell* a, const SweepCell* b) { return a->C < b->C; });
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j]->p_hat < 0.5) continue;
        if (j == 0) return row[0]->C;
        const SweepCell& a = *row[j - 1];
        const SweepCell& b = *row[j];
        return a.C + (0.5 - a.p_hat) * (b.C - a.C) / (b.p_hat - a.p_hat);
    }
    return std::nullopt;
}

} // namespace ramsey
