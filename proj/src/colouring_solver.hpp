#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ramsey::detail {

/// Edge colouring with forbidden monochromatic sets: find c : [edges] -> [colours]
/// such that no set in forbidden[i] is entirely coloured i.
struct ColouringProblem {
    std::size_t edges = 0;
    int colours = 0;
    std::vector<std::vector<std::vector<std::size_t>>> forbidden;
    /// Initial branching priority per edge (higher first).
    std::vector<double> priority;
    /// Colour tried last when branching, or -1.
    int deferred_colour = -1;
};

struct ColouringSearch {
    enum class Status { satisfiable, unsatisfiable, budget_exhausted };
    Status status = Status::unsatisfiable;
    /// 0-based colour per edge when satisfiable.
    std::vector<int> colouring;
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
};

/// Conflict-driven clause learning over variables x(e, c) = "edge e has
/// colour c". Stops with budget_exhausted once `budget` decisions are made.
ColouringSearch solve_colouring(const ColouringProblem& problem, std::uint64_t budget);

} // namespace ramsey::detail
