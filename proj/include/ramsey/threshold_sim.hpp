#pragma once

#include "ramsey/arrow.hpp"
#include "ramsey/balance.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval for `successes` out of `n`; (0, 1) when n = 0.
WilsonInterval wilson_interval(std::size_t successes, std::size_t n, double z = kWilsonZ95);

/// Aggregated trials at one (n, p). Indeterminate trials are excluded from
/// p_hat and the interval.
struct SweepCell {
    int n = 0;
    double C = 0.0;
    double p = 0.0;
    std::size_t trials = 0;
    std::size_t arrows = 0;
    std::size_t non_arrows = 0;
    std::size_t indeterminate = 0;
    double p_hat = 0.0;
    WilsonInterval wilson;
    std::uint64_t seed = 0;
    /// C n^{-1/m} >= 1 was requested and the cell ran at p = 1.
    bool clamped = false;
    /// More than 2% of the trials were indeterminate.
    bool unusable = false;

    /// Typed sweeps only: the coupled G(n, p) samples decided against
    /// (H, F_2, ..., F_r), and the number of pairs where the typed sample is
    /// not an edge subset of the untyped one or where the untyped sample is
    /// a non-arrow but the typed one arrows. Both counts must be zero.
    std::size_t untyped_arrows = 0;
    std::size_t untyped_non_arrows = 0;
    std::size_t untyped_indeterminate = 0;
    std::size_t coupling_violations = 0;
};

/// Runs fn(0), ..., fn(count - 1) on up to `jobs` threads (0: hardware
/// concurrency). Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Trial t samples G(n, p) with seed mix_seed(seed, {t}).
SweepCell estimate_arrow_probability(int n, double p, const std::vector<Graph>& targets, std::size_t trials,
                                     std::uint64_t seed, std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);

struct SweepSpec {
    std::vector<Graph> targets;
    std::vector<int> n_values;
    std::vector<double> C_values;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    /// Sample G(n, p, w) and decide the typed arrow (H, F_2, ..., F_r).
    bool typed = false;
    /// H for typed sweeps; defaults to the densest target.
    std::optional<Graph> pattern;
    /// Defaults to solve_balanced_weights(H, F_2).
    std::optional<WeightFunction> weights;
    unsigned jobs = 1;

    /// Throws DomainError on empty grids, C <= 0, trials = 0, n outside
    /// [1, 64] or fewer than two targets.
    void validate() const;
};

/// m2(F1, F2) for the two targets of largest m2 (F1 the densest); the
/// sweep uses p = C n^{-1/m2(F1, F2)}.
Rational threshold_density(const std::vector<Graph>& targets);

/// Cell (i, j) for n_values[i], C_values[j] uses seed mix_seed(seed, {i, j});
/// cells are ordered by n index, then C index.
std::vector<SweepCell> sweep(const SweepSpec& spec);
std::vector<SweepCell> typed_sweep(const SweepSpec& spec);

std::string to_csv(const std::vector<SweepCell>& cells);
json to_json(const SweepCell& cell);
json to_json(const std::vector<SweepCell>& cells);

/// First C at which p_hat reaches 0.5 among cells with the given n
/// (interpolated linearly in C), or nullopt if it never does.
std::optional<double> crossing_point(const std::vector<SweepCell>& cells, int n);

} // namespace ramsey
