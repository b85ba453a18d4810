#include "ramsey/copies.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace ramsey {

namespace {

struct EdgeListHash {
    std::size_t operator()(const std::vector<EdgeId>& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (EdgeId x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Orders pattern vertices so that each one (after the first of its
// component) has an already-placed neighbour; ties go to higher degree.
std::vector<Vertex> search_order(const Graph& pattern) {
    std::vector<Vertex> order;
    VertexSet remaining = pattern.support();
    VertexSet placed = 0;
    while (remaining) {
        Vertex best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (VertexSet r = remaining; r; r &= r - 1) {
            Vertex v = std::countr_zero(r);
            int links = popcount(pattern.neighbours(v) & placed);
            int deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_degree)) {
                best = v;
                best_links = links;
                best_degree = deg;
            }
        }
        order.push_back(best);
        placed |= bit(best);
        remaining &= ~bit(best);
    }
    return order;
}

class MonomorphismSearch {
public:
    MonomorphismSearch(const Graph& pattern, const Graph& host, const MonomorphismVisitor& visit, const EdgeFilter& filter)
        : pattern_(pattern), host_(host), visit_(visit), filter_(filter), order_(search_order(pattern)),
          map_(static_cast<std::size_t>(pattern.order()), -1) {
        host_support_ = host.support();
    }

    std::size_t run() {
        if (order_.empty()) return 0;
        recurse(0, 0);
        return visited_;
    }

private:
    void recurse(std::size_t depth, VertexSet used) {
        if (stop_) return;
        if (depth == order_.size()) {
            ++visited_;
            if (!visit_(map_)) stop_ = true;
            return;
        }
        const Vertex x = order_[depth];
        const int need = pattern_.degree(x);
        VertexSet cand = host_support_ & ~used;
        VertexSet back = 0;
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex y = order_[i];
            if (pattern_.has_edge(x, y)) {
                cand &= host_.neighbours(map_[y]);
                back |= bit(y);
            }
        }
        for (; cand; cand &= cand - 1) {
            Vertex c = std::countr_zero(cand);
            if (host_.degree(c) < need) continue;
            if (filter_) {
                bool ok = true;
                for (VertexSet b = back; b && ok; b &= b - 1) {
                    Vertex y = std::countr_zero(b);
                    ok = filter_(x, y, c, map_[y]);
                }
                if (!ok) continue;
            }
            map_[x] = c;
            recurse(depth + 1, used | bit(c));
            map_[x] = -1;
            if (stop_) return;
        }
    }

    const Graph& pattern_;
    const Graph& host_;
    const MonomorphismVisitor& visit_;
    const EdgeFilter& filter_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    VertexSet host_support_ = 0;
    std::size_t visited_ = 0;
    bool stop_ = false;
};

std::vector<EdgeId> image_edges(const Graph& pattern, const Graph& host, std::span<const Vertex> map) {
    std::vector<EdgeId> ids;
    ids.reserve(pattern.size());
    for (const Edge& e : pattern.edges()) ids.push_back(host.id_of(map[e.u], map[e.v]));
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<Copy> distinct_copies(const Graph& pattern, const Graph& host, const EdgeFilter& filter) {
    std::vector<Copy> copies;
    std::unordered_set<std::vector<EdgeId>, EdgeListHash> seen;
    for_each_monomorphism(
        pattern, host,
        [&](std::span<const Vertex> map) {
            std::vector<EdgeId> ids = image_edges(pattern, host, map);
            if (seen.insert(ids).second)
                copies.push_back(Copy{Embedding{std::vector<Vertex>(map.begin(), map.end())}, std::move(ids)});
            return true;
        },
        filter);
    return copies;
}

std::vector<int> degree_profile(const Graph& g) {
    std::vector<int> d;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

std::size_t for_each_monomorphism(const Graph& pattern, const Graph& host, const MonomorphismVisitor& visit,
                                  const EdgeFilter& filter) {
    return MonomorphismSearch(pattern, host, visit, filter).run();
}

std::size_t count_monomorphisms(const Graph& pattern, const Graph& host) {
    return for_each_monomorphism(pattern, host, [](std::span<const Vertex>) { return true; });
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for_each_monomorphism(g, g, [&](std::span<const Vertex> map) {
        out.emplace_back(map.begin(), map.end());
        return true;
    });
    return out;
}

std::size_t automorphism_count(const Graph& g) { return count_monomorphisms(g, g); }

std::size_t edge_fixing_automorphism_count(const Graph& g) {
    std::size_t count = 0;
    for_each_monomorphism(g, g, [&](std::span<const Vertex> map) {
        bool fixes = std::all_of(g.edges().begin(), g.edges().end(),
                                 [&](const Edge& e) { return Edge::of(map[e.u], map[e.v]) == e; });
        count += fixes ? 1 : 0;
        return true;
    });
    return count;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (degree_profile(a) != degree_profile(b)) return false;
    if (a.empty()) return true;
    bool found = false;
    for_each_monomorphism(a, b, [&](std::span<const Vertex>) {
        found = true;
        return false;
    });
    return found;
}

std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host) {
    if (pattern.empty()) throw DomainError("copy enumeration needs a pattern with at least one edge");
    return distinct_copies(pattern, host, nullptr);
}

bool is_typomorphic(const TypedGraph& a, const TypedGraph& b) {
    if (!a.same_pattern(b)) throw DomainError("typomorphism test between graphs typed by different patterns");
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    if (ga.order() != gb.order() || ga.size() != gb.size()) return false;
    std::vector<EdgeId> ta = a.types();
    std::vector<EdgeId> tb = b.types();
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb || degree_profile(ga) != degree_profile(gb)) return false;
    if (ga.empty()) return true;
    bool found = false;
    for_each_monomorphism(
        ga, gb,
        [&](std::span<const Vertex>) {
            found = true;
            return false;
        },
        [&](Vertex pa, Vertex pb, Vertex ha, Vertex hb) { return a.type_of(pa, pb) == b.type_of(ha, hb); });
    return found;
}

std::vector<Copy> typed_copies(EdgeMask mask, const TypedGraph& g) {
    const Graph& h = g.pattern();
    if (mask == 0) throw DomainError("typed copies of an empty subgraph");
    if (h.size() < 64 && (mask >> h.size()) != 0) throw DomainError("subgraph is not contained in the pattern");
    Graph sub = h.edge_subgraph(mask);
    return distinct_copies(sub, g.graph(), [&](Vertex pa, Vertex pb, Vertex ha, Vertex hb) {
        return g.type_of(ha, hb) == h.id_of(pa, pb);
    });
}

std::size_t count_typed_copies(EdgeMask mask, const TypedGraph& g) { return typed_copies(mask, g).size(); }

} // namespace ramsey
