#include "ramsey/family.hpp"

#include "ramsey/copies.hpp"
#include "ramsey/densities.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ramsey {

namespace {

using OrientedEdge = std::pair<Vertex, Vertex>;

// One oriented edge per orbit of Aut(F) acting on oriented edges.
std::vector<OrientedEdge> oriented_edge_orbits(const Graph& f) {
    const auto auts = automorphisms(f);
    std::vector<OrientedEdge> reps;
    for (const Edge& e : f.edges()) {
        for (OrientedEdge oe : {OrientedEdge{e.u, e.v}, OrientedEdge{e.v, e.u}}) {
            OrientedEdge least = oe;
            for (const auto& alpha : auts) least = std::min(least, OrientedEdge{alpha[oe.first], alpha[oe.second]});
            if (least == oe) reps.push_back(oe);
        }
    }
    return reps;
}

// One EdgeId per orbit of Aut(F) acting on edges.
std::vector<EdgeId> edge_orbits(const Graph& f) {
    const auto auts = automorphisms(f);
    std::vector<EdgeId> reps;
    for (EdgeId id = 0; id < f.size(); ++id) {
        const Edge e = f.edge(id);
        EdgeId least = id;
        for (const auto& alpha : auts) least = std::min(least, f.id_of(alpha[e.u], alpha[e.v]));
        if (least == id) reps.push_back(id);
    }
    return reps;
}

struct Prepared {
    Graph f1;
    Graph f2;
};

Prepared prepare(const Graph& f1, const Graph& f2) {
    if (f1.empty() || f2.empty()) throw DomainError("F1 and F2 must have at least one edge");
    return {f1.without_isolated(), f2.without_isolated()};
}

bool is_generic(const FamilyMember& m, int core_vertices) {
    std::vector<int> owner(static_cast<std::size_t>(m.graph.order()), -1);
    for (std::size_t g = 0; g < m.glued.size(); ++g) {
        for (Vertex x : m.glued[g].map) {
            if (x < core_vertices) continue;
            int& o = owner[static_cast<std::size_t>(x)];
            if (o != -1 && o != static_cast<int>(g)) return false;
            o = static_cast<int>(g);
        }
    }
    // Inside the core a glued copy may only use the two endpoints of its edge.
    for (const auto& g : m.glued) {
        int inside = 0;
        for (Vertex x : g.map) inside += x < core_vertices;
        if (inside != 2) return false;
    }
    return true;
}

std::vector<int> degree_profile(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// Isomorphism-deduplicated member list; a generic structure replaces a
// non-generic one on the same graph.
class MemberSet {
public:
    void add(FamilyMember m) {
        auto& bucket = buckets_[{m.graph.order(), m.graph.size(), degree_profile(m.graph)}];
        for (std::size_t idx : bucket) {
            if (are_isomorphic(members_[idx].graph, m.graph)) {
                if (m.generic && !members_[idx].generic) members_[idx] = std::move(m);
                return;
            }
        }
        bucket.push_back(members_.size());
        members_.push_back(std::move(m));
    }

    std::vector<FamilyMember> take() { return std::move(members_); }

private:
    std::map<std::tuple<int, std::size_t, std::vector<int>>, std::vector<std::size_t>> buckets_;
    std::vector<FamilyMember> members_;
};

FamilyMember assemble(const Graph& core, EdgeId attachment, std::vector<FamilyMember::Glued> glued, int vertices,
                      const Graph& f1) {
    std::vector<Edge> edges(core.edges().begin(), core.edges().end());
    for (const auto& g : glued)
        for (const Edge& e : f1.edges()) edges.push_back(Edge::of(g.map[e.u], g.map[e.v]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    FamilyMember m;
    m.graph = Graph(vertices, edges);
    for (Vertex v = 0; v < core.order(); ++v) m.core.push_back(v);
    m.attachment = attachment;
    m.attachment_edge = core.edge(attachment);
    m.glued = std::move(glued);
    m.generic = is_generic(m, core.order());
    return m;
}

} // namespace

std::vector<FamilyMember> generic_members(const Graph& f1_in, const Graph& f2_in) {
    const auto [f1, f2] = prepare(f1_in, f2_in);
    const long vertices = f2.order() + static_cast<long>(f2.size() - 1) * (f1.order() - 2);
    if (vertices > kMaxVertices) throw LimitError("generic members would exceed 64 vertices");
    const auto orientations = oriented_edge_orbits(f1);
    const auto attachments = edge_orbits(f2);
    double combos = static_cast<double>(attachments.size());
    for (std::size_t i = 1; i < f2.size(); ++i) combos *= static_cast<double>(orientations.size());
    if (combos > 1e6) throw LimitError("too many generic gluing choices");

    MemberSet out;
    for (EdgeId e0 : attachments) {
        std::vector<EdgeId> others;
        for (EdgeId id = 0; id < f2.size(); ++id)
            if (id != e0) others.push_back(id);
        std::vector<std::size_t> choice(others.size(), 0);
        for (;;) {
            std::vector<FamilyMember::Glued> glued;
            Vertex next = f2.order();
            for (std::size_t k = 0; k < others.size(); ++k) {
                const Edge e = f2.edge(others[k]);
                const OrientedEdge o = orientations[choice[k]];
                FamilyMember::Glued g{others[k], std::vector<Vertex>(static_cast<std::size_t>(f1.order()), -1)};
                g.map[static_cast<std::size_t>(o.first)] = e.u;
                g.map[static_cast<std::size_t>(o.second)] = e.v;
                for (Vertex& x : g.map)
                    if (x == -1) x = next++;
                glued.push_back(std::move(g));
            }
            out.add(assemble(f2, e0, std::move(glued), next, f1));
            std::size_t k = 0;
            while (k < choice.size() && ++choice[k] == orientations.size()) choice[k++] = 0;
            if (k == choice.size()) break;
        }
    }
    return out.take();
}

namespace {

class MemberSearch {
public:
    MemberSearch(const Graph& f1, const Graph& f2, int vcap)
        : f1_(f1), f2_(f2), vcap_(vcap), orientations_(oriented_edge_orbits(f1)) {}

    std::vector<FamilyMember> run() {
        if (f2_.order() > vcap_) return {};
        for (EdgeId e0 : edge_orbits(f2_)) {
            attachment_ = e0;
            others_.clear();
            for (EdgeId id = 0; id < f2_.size(); ++id)
                if (id != e0) others_.push_back(id);
            glued_.clear();
            glue(0, f2_.order());
        }
        return out_.take();
    }

private:
    void tick() {
        if (++nodes_ > 2'000'000) throw LimitError("member enumeration exceeded its search-node guard");
    }

    void glue(std::size_t k, int vertices) {
        tick();
        if (k == others_.size()) {
            out_.add(assemble(f2_, attachment_, glued_, vertices, f1_));
            return;
        }
        const Edge e = f2_.edge(others_[k]);
        for (const OrientedEdge& o : orientations_) {
            std::vector<Vertex> map(static_cast<std::size_t>(f1_.order()), -1);
            map[static_cast<std::size_t>(o.first)] = e.u;
            map[static_cast<std::size_t>(o.second)] = e.v;
            place(k, map, 0, vertices);
        }
    }

    // Maps the remaining F1 vertices, in increasing order, onto existing
    // vertices or the next fresh one.
    void place(std::size_t k, std::vector<Vertex>& map, Vertex z, int vertices) {
        tick();
        while (z < f1_.order() && map[static_cast<std::size_t>(z)] != -1) ++z;
        if (z == f1_.order()) {
            glued_.push_back({others_[k], map});
            glue(k + 1, vertices);
            glued_.pop_back();
            return;
        }
        for (Vertex u = 0; u < vertices; ++u) {
            if (std::find(map.begin(), map.end(), u) != map.end()) continue;
            map[static_cast<std::size_t>(z)] = u;
            place(k, map, z + 1, vertices);
        }
        if (vertices < vcap_) {
            map[static_cast<std::size_t>(z)] = vertices;
            place(k, map, z + 1, vertices + 1);
        }
        map[static_cast<std::size_t>(z)] = -1;
    }

    const Graph& f1_;
    const Graph& f2_;
    int vcap_;
    std::vector<OrientedEdge> orientations_;
    EdgeId attachment_ = 0;
    std::vector<EdgeId> others_;
    std::vector<FamilyMember::Glued> glued_;
    MemberSet out_;
    std::uint64_t nodes_ = 0;
};

} // namespace

MemberEnumeration enumerate_members(const Graph& f1_in, const Graph& f2_in, int vcap) {
    if (vcap < 0 || vcap > 16) throw DomainError("vcap must lie in [0, 16]");
    const auto [f1, f2] = prepare(f1_in, f2_in);
    MemberEnumeration result;
    result.members = MemberSearch(f1, f2, vcap).run();
    return result;
}

const char* to_string(BalanceViolation::Kind k) {
    return k == BalanceViolation::Kind::below_threshold ? "below_threshold" : "equality_not_generic_single_edge";
}

const char* to_string(ConditionIvResult::Status s) {
    switch (s) {
    case ConditionIvResult::Status::holds: return "holds";
    case ConditionIvResult::Status::fails: return "fails";
    case ConditionIvResult::Status::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

BalanceVerdict check_asymmetric_balanced(const Graph& f1_in, const Graph& f2_in, int vcap) {
    const auto [f1, f2] = prepare(f1_in, f2_in);
    const Rational m2_f1 = m2(f1).value, m2_f2 = m2(f2).value;
    if (!(m2_f1 >= m2_f2 && m2_f2 > 1)) throw DomainError("requires m2(F1) >= m2(F2) > 1");

    BalanceVerdict verdict;
    verdict.threshold = m2_asym(f1, f2).value;
    verdict.members = enumerate_members(f1, f2, vcap).members;
    const long t_num = verdict.threshold.get_num().get_si();
    const long t_den = verdict.threshold.get_den().get_si();

    for (std::size_t idx = 0; idx < verdict.members.size(); ++idx) {
        const FamilyMember& m = verdict.members[idx];
        const Graph& f = m.graph;
        const Edge att = m.attachment_edge;
        const int v = f.order();
        const long e = static_cast<long>(f.size());
        const VertexSet all = f.all_vertices();
        const VertexSet must = bit(att.u) | bit(att.v);
        const VertexSet rest = all & ~must;
        // Subsets of `rest`, enumerated by the standard submask walk.
        for (VertexSet extra = rest;; extra = (extra - 1) & rest) {
            const VertexSet s = must | extra;
            if (s != all) {
                bool isolated = false;
                for (VertexSet r = s; r && !isolated; r &= r - 1)
                    isolated = (f.neighbours(std::countr_zero(r)) & s) == 0;
                if (!isolated) {
                    const long eh = static_cast<long>(f.induced_edge_count(s));
                    const long dv = v - popcount(s);
                    const long lhs = (e - eh) * t_den, rhs = t_num * dv;
                    if (lhs <= rhs) {
                        std::vector<Edge> edges;
                        for (EdgeId id : f.induced_edge_ids(s)) edges.push_back(f.edge(id));
                        if (lhs == rhs && m.generic && eh == 1) {
                            verdict.equality_cases.push_back({idx, s, std::move(edges)});
                        } else {
                            verdict.violations.push_back(
                                {idx, s, std::move(edges), Rational(e - eh, dv),
                                 lhs < rhs ? BalanceViolation::Kind::below_threshold
                                           : BalanceViolation::Kind::equality_not_generic_single_edge});
                            verdict.violations.back().ratio.canonicalize();
                        }
                    }
                }
            }
            if (extra == 0) break;
        }
    }
    verdict.balanced = verdict.violations.empty();
    verdict.condition1_holds = std::none_of(verdict.violations.begin(), verdict.violations.end(), [](const auto& x) {
        return x.kind == BalanceViolation::Kind::below_threshold;
    });
    return verdict;
}

ConditionIvResult check_condition_iv(const Graph& g, const Graph& f1, const Graph& f2, std::uint64_t budget) {
    ConditionIvResult result;
    result.threshold = m2_asym(f1, f2).value;
    result.max_density = g.empty() ? Rational(0) : max_density(g).value;
    if (result.max_density > result.threshold) {
        result.vacuous = true;
        result.status = ConditionIvResult::Status::holds;
        return result;
    }
    const Graph targets[] = {f1, f2};
    result.arrow = arrow_decide(g, targets, budget);
    switch (result.arrow->outcome) {
    case Outcome::arrows: result.status = ConditionIvResult::Status::fails; break;
    case Outcome::does_not_arrow: result.status = ConditionIvResult::Status::holds; break;
    case Outcome::indeterminate: result.status = ConditionIvResult::Status::indeterminate; break;
    }
    return result;
}

} // namespace ramsey
