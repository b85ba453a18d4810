#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/typed_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

/// Colour in 1..r for every host edge, indexed by EdgeId.
using Colouring = std::vector<int>;

enum class Outcome { arrows, does_not_arrow, indeterminate };

const char* to_string(Outcome o);

struct ArrowStats {
    std::uint64_t nodes = 0;
    std::uint64_t conflicts = 0;
    /// Number of constraint copies per colour (typed copies of H for colour 1
    /// in the typed variant).
    std::vector<std::size_t> copies_per_colour;
};

struct ArrowResult {
    Outcome outcome = Outcome::indeterminate;
    /// A colouring with no copy of F_i in colour i; present iff the host does
    /// not arrow.
    std::optional<Colouring> certificate;
    ArrowStats stats;
    /// The node budget the search ran under.
    std::uint64_t budget = 0;

    bool arrows() const { return outcome == Outcome::arrows; }
};

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

/// Decides G -> (F_1, ..., F_r) for 1 <= r <= 6 nonempty targets. Search
/// nodes are branching decisions; running out gives Outcome::indeterminate.
ArrowResult arrow_decide(const Graph& g, std::span<const Graph> targets, std::uint64_t budget = kDefaultBudget);

/// Decides the typed arrow G -> (H, F_2, ..., F_r): colour 1 must avoid typed
/// copies of H = g.pattern(), colour i >= 2 untyped copies of others[i-2].
ArrowResult typed_arrow_decide(const TypedGraph& g, std::span<const Graph> others,
                               std::uint64_t budget = kDefaultBudget);

/// Rechecks a colouring by counting monomorphisms into each colour class.
bool verify_non_arrow(const Graph& g, std::span<const Graph> targets, const Colouring& colouring);
bool verify_typed_non_arrow(const TypedGraph& g, std::span<const Graph> others, const Colouring& colouring);

/// Every edge that lies in no copy of f1 is recoloured 1.
Colouring normalize_colouring(const Graph& g, const Graph& f1, const Colouring& colouring);
/// Every edge that lies in no typed copy of g.pattern() is recoloured 1.
Colouring normalize_typed_colouring(const TypedGraph& g, const Colouring& colouring);

struct SamplingOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

struct MonoCopiesResult {
    /// min over colourings of max_i (copies of F_i in colour i).
    std::size_t min_max = 0;
    /// min over colourings of the total number of such copies.
    std::size_t min_total = 0;
    /// Per-colour counts at the first colouring attaining min_total.
    std::vector<std::size_t> counts;
    Colouring colouring;
    std::uint64_t colourings_examined = 0;
    /// False when the minimum was taken over random colourings only.
    bool exhaustive = true;
};

/// Minimum number of monochromatic copies over r-colourings of K_n. Needs
/// r^{C(n,2)} <= cap unless sampling is requested (then LimitError is not
/// thrown and the result is an upper bound). n must satisfy C(n,2) <= 64.
MonoCopiesResult min_mono_copies(int n, std::span<const Graph> targets, std::uint64_t cap = std::uint64_t{1} << 24,
                                 std::optional<SamplingOptions> sampling = std::nullopt);

} // namespace ramsey
