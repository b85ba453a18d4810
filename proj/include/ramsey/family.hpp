#pragma once

#include "ramsey/arrow.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ramsey {

/// One constructed member of the family F(F1, F2): a copy of F2 (the core)
/// with a copy of F1 glued onto every core edge except the attachment edge.
/// Isolated vertices of F1 and F2 are dropped before construction.
struct FamilyMember {
    struct Glued {
        /// Core edge (EdgeId in the compacted F2) this copy is glued onto.
        EdgeId core_edge = 0;
        /// Vertex of `graph` for each vertex of the compacted F1.
        std::vector<Vertex> map;
    };

    Graph graph;
    /// Vertex of `graph` for each vertex of the compacted F2 (the identity
    /// for constructed members).
    std::vector<Vertex> core;
    /// EdgeId of the attachment edge in the compacted F2, and the same edge
    /// in `graph`.
    EdgeId attachment = 0;
    Edge attachment_edge;
    std::vector<Glued> glued;
    /// Every glued copy meets the core only in its own edge and is
    /// vertex-disjoint from the other glued copies outside the core.
    bool generic = false;
};

/// All generic members up to isomorphism. Throws LimitError when a member
/// would exceed 64 vertices or the number of gluing choices exceeds 10^6.
std::vector<FamilyMember> generic_members(const Graph& f1, const Graph& f2);

struct MemberEnumeration {
    std::vector<FamilyMember> members;
    /// F(F1, F2) is infinite in general, so the list is always vcap-bounded.
    bool partial = true;
};

/// All members with at most vcap <= 16 vertices, up to isomorphism (a
/// generic structure is kept when a graph has several). Throws LimitError
/// after 2*10^6 search nodes.
MemberEnumeration enumerate_members(const Graph& f1, const Graph& f2, int vcap);

struct BalanceViolation {
    enum class Kind {
        /// (e(F) - e(H)) / (v(F) - v(H)) < m2(F1, F2).
        below_threshold,
        /// Equality, but F is not generic or H has more than one edge.
        equality_not_generic_single_edge,
    };
    std::size_t member = 0;
    VertexSet vertices = 0;
    std::vector<Edge> edges;
    Rational ratio;
    Kind kind = Kind::below_threshold;
};

struct EqualityCase {
    std::size_t member = 0;
    VertexSet vertices = 0;
    std::vector<Edge> edges;
};

struct BalanceVerdict {
    /// No violation of either kind among the enumerated members.
    bool balanced = false;
    /// No below_threshold violation.
    bool condition1_holds = false;
    Rational threshold;
    std::vector<FamilyMember> members;
    std::vector<BalanceViolation> violations;
    /// Equalities at a generic member with H the attachment edge alone.
    std::vector<EqualityCase> equality_cases;
    bool partial = true;
};

const char* to_string(BalanceViolation::Kind k);

/// Checks the asymmetric-balanced conditions on every member with at most
/// vcap vertices. H ranges over induced subgraphs on proper vertex subsets
/// that contain the attachment edge and have no isolated vertices (extra
/// isolated vertices or missing edges only raise the ratio). Throws
/// DomainError unless m2(F1) >= m2(F2) > 1.
BalanceVerdict check_asymmetric_balanced(const Graph& f1, const Graph& f2, int vcap);

struct ConditionIvResult {
    enum class Status { holds, fails, indeterminate };
    Status status = Status::indeterminate;
    /// max_density(G) > m2(F1, F2): the implication holds trivially.
    bool vacuous = false;
    Rational max_density;
    Rational threshold;
    std::optional<ArrowResult> arrow;
};

const char* to_string(ConditionIvResult::Status s);

/// If G is no denser than m2(F1, F2), the condition holds iff G does not
/// arrow (F1, F2). F1 and F2 must satisfy m2(F1) >= m2(F2).
ConditionIvResult check_condition_iv(const Graph& g, const Graph& f1, const Graph& f2,
                                     std::uint64_t budget = kDefaultBudget);

} // namespace ramsey
