#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/arrow.hpp"
#include "ramsey/copies.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"
#include "zoo.hpp"

#include <algorithm>

using namespace ramsey;
using namespace testing_support;

namespace {

Graph c5_with_pendants() {
    Graph g = graphs::cycle(5);
    for (Vertex v = 0; v < 5; ++v) g = graphs::with_pendant(g, v);
    return g;
}

ArrowResult decide(const Graph& g, std::vector<Graph> targets, std::uint64_t budget = kDefaultBudget) {
    return arrow_decide(g, targets, budget);
}

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

} // namespace

TEST_CASE("outcome names") {
    CHECK(std::string(to_string(Outcome::arrows)) == "arrows");
    CHECK(std::string(to_string(Outcome::does_not_arrow)) == "does_not_arrow");
    CHECK(std::string(to_string(Outcome::indeterminate)) == "indeterminate");
}

TEST_CASE("K6 arrows two triangles") {
    const Graph k3 = graphs::complete(3);
    const auto r = decide(graphs::complete(6), {k3, k3});
    CHECK(r.outcome == Outcome::arrows);
    CHECK_FALSE(r.certificate.has_value());
    CHECK(r.stats.copies_per_colour == std::vector<std::size_t>{20, 20});
}

TEST_CASE("K5 does not arrow two triangles and the certificate checks out") {
    const Graph k3 = graphs::complete(3);
    const Graph k5 = graphs::complete(5);
    const auto r = decide(k5, {k3, k3});
    REQUIRE(r.outcome == Outcome::does_not_arrow);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_non_arrow(k5, std::vector<Graph>{k3, k3}, *r.certificate));
    // The two colour classes are both five-cycles.
    std::vector<Edge> red;
    for (EdgeId e = 0; e < k5.size(); ++e)
        if ((*r.certificate)[e] == 1) red.push_back(k5.edge(e));
    CHECK(are_isomorphic(Graph(5, red), graphs::cycle(5)));
}

TEST_CASE("small fixtures") {
    CHECK(decide(c5_with_pendants(), {graphs::path(3), graphs::path(3)}).arrows());
    CHECK_FALSE(decide(graphs::cycle(5), {graphs::path(3), graphs::path(3)}).arrows());
    CHECK(decide(graphs::complete(4), {graphs::star(2), graphs::star(2)}).arrows());
    CHECK(decide(graphs::complete(3), {graphs::star(2), graphs::star(2)}).arrows());
    CHECK_FALSE(decide(graphs::path(3), {graphs::star(2), graphs::star(2)}).arrows());
    CHECK_FALSE(decide(graphs::cycle(5), {graphs::complete(3), graphs::complete(3)}).arrows());
    // R(3, 4) = 9.
    CHECK(decide(graphs::complete(9), {graphs::complete(3), graphs::complete(4)}).arrows());
    CHECK_FALSE(decide(graphs::complete(8), {graphs::complete(3), graphs::complete(4)}).arrows());
    // R(3, 3, 3) = 17 is out of reach here, but K5 fails trivially with three colours.
    CHECK_FALSE(decide(graphs::complete(5), {graphs::complete(3), graphs::complete(3), graphs::complete(3)}).arrows());
}

TEST_CASE("single colour and degenerate inputs") {
    CHECK(decide(graphs::complete(4), {graphs::complete(3)}).arrows());
    CHECK_FALSE(decide(graphs::cycle(4), {graphs::complete(3)}).arrows());
    CHECK_THROWS_AS(decide(graphs::complete(4), {}), DomainError);
    CHECK_THROWS_AS(decide(graphs::complete(4), {Graph(3)}), DomainError);
    CHECK_FALSE(decide(Graph(4), {graphs::complete(2), graphs::complete(2)}).arrows());
    CHECK(decide(graphs::complete(2), {graphs::complete(2)}).arrows());
}

TEST_CASE("a zero budget on a nontrivial instance is indeterminate") {
    const auto r = decide(graphs::complete(6), {graphs::complete(3), graphs::complete(3)}, 0);
    CHECK(r.outcome == Outcome::indeterminate);
    CHECK(r.budget == 0);
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("search agrees with exhaustive colouring on random hosts") {
    const std::vector<std::vector<Graph>> target_sets{
        {graphs::complete(3), graphs::complete(3)},
        {graphs::path(2), graphs::path(2)},
        {graphs::cycle(4), graphs::complete(3)},
        {graphs::star(3), graphs::path(2)},
        {graphs::complete(3), graphs::path(2), graphs::complete(2)},
    };
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_graph(6 + static_cast<int>(rng.below(2)), 0.75, rng.next());
        if (g.size() > 14) continue;
        for (const auto& ts : target_sets) {
            const auto r = arrow_decide(g, ts);
            REQUIRE(r.outcome != Outcome::indeterminate);
            CHECK(r.arrows() == oracle_arrows(g, ts));
            if (r.certificate) CHECK(verify_non_arrow(g, ts, *r.certificate));
        }
    }
}

TEST_CASE("adding edges never destroys the arrow property") {
    const std::vector<Graph> ts{graphs::complete(3), graphs::complete(3)};
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(7, 0.6, rng.next());
        bool before = arrow_decide(g, ts).arrows();
        for (Vertex a = 0; a < 7; ++a)
            for (Vertex b = a + 1; b < 7; ++b)
                if (!g.has_edge(a, b) && rng.below(3) == 0) {
                    g = g.with_edge({a, b});
                    const bool after = arrow_decide(g, ts).arrows();
                    CHECK((!before || after));
                    before = after;
                }
    }
}

TEST_CASE("the answer does not depend on the order of the targets") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        const Graph g = random_graph(7, 0.7, rng.next());
        const std::vector<Graph> ab{graphs::complete(3), graphs::cycle(4)};
        const std::vector<Graph> ba{graphs::cycle(4), graphs::complete(3)};
        CHECK(arrow_decide(g, ab).arrows() == arrow_decide(g, ba).arrows());
    }
}

TEST_CASE("normalization recolours edges outside every copy of the first target") {
    Graph g = graphs::with_pendant(graphs::complete(3), 0);
    const Colouring c{2, 1, 2, 2};  // edges 01, 02, 03, 12
    const Colouring n = normalize_colouring(g, graphs::complete(3), c);
    CHECK(n == Colouring{2, 1, 1, 2});
    const auto r = arrow_decide(g, std::vector<Graph>{graphs::complete(3), graphs::complete(3)});
    REQUIRE(r.certificate.has_value());
    CHECK((*r.certificate)[g.id_of(0, 3)] == 1);
}

TEST_CASE("minimum number of monochromatic triangles in two-colourings of K6") {
    const std::vector<Graph> ts{graphs::complete(3), graphs::complete(3)};
    const auto six = min_mono_copies(6, ts);
    CHECK(six.min_total == 2);
    CHECK(six.min_max == 1);
    CHECK(six.exhaustive);
    CHECK(six.colourings_examined == (std::uint64_t{1} << 15));
    CHECK(six.counts[0] + six.counts[1] == 2);
    CHECK(min_mono_copies(5, ts).min_total == 0);
    CHECK(min_mono_copies(2, std::vector<Graph>{graphs::complete(2)}).min_total == 1);
    CHECK_THROWS_AS(min_mono_copies(7, ts, 1U << 20), LimitError);
    const auto sampled = min_mono_copies(7, ts, 1U << 20, SamplingOptions{2000, 1});
    CHECK_FALSE(sampled.exhaustive);
    CHECK(sampled.min_total >= 4);  // Goodman's bound for n = 7
}

TEST_CASE("typed arrow with a rainbow triangle pattern") {
    auto k3 = share(graphs::complete(3));
    const std::vector<Graph> others{graphs::complete(3)};
    // Untyped K6 arrows (K3, K3); typed versions are at most as strong.
    const Graph k6 = graphs::complete(6);
    std::vector<EdgeId> same(k6.size(), 0);
    const TypedGraph mono(k6, k3, same);
    const auto r = typed_arrow_decide(mono, others);
    CHECK(r.outcome == Outcome::does_not_arrow);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_typed_non_arrow(mono, others, *r.certificate));
    // With no typed copies every edge is free to take colour 1.
    CHECK(std::all_of(r.certificate->begin(), r.certificate->end(), [](int c) { return c == 1; }));

    // A single rainbow triangle must arrow (H, K2): colouring it all 1 is a
    // typed copy, otherwise some edge takes colour 2.
    const TypedGraph rainbow(graphs::complete(3), k3, {0, 1, 2});
    CHECK(typed_arrow_decide(rainbow, std::vector<Graph>{graphs::complete(2)}).arrows());
}

TEST_CASE("typed arrow agrees with the untyped one when types are irrelevant") {
    // H = K2: every edge is a typed copy, so the typed arrow equals the untyped one with F1 = K2.
    auto k2 = share(graphs::complete(2));
    Rng rng(17);
    for (int i = 0; i < 15; ++i) {
        const Graph g = random_graph(7, 0.6, rng.next());
        const TypedGraph t(g, k2, std::vector<EdgeId>(g.size(), 0));
        const std::vector<Graph> others{graphs::complete(3)};
        const std::vector<Graph> all{graphs::complete(2), graphs::complete(3)};
        CHECK(typed_arrow_decide(t, others).arrows() == arrow_decide(g, all).arrows());
    }
}

TEST_CASE("an untyped non-arrow colouring is also a typed one") {
    // Typed copies are a subset of copies.
    auto k3 = share(graphs::complete(3));
    Rng rng(3);
    const std::vector<Graph> others{graphs::complete(3)};
    for (int i = 0; i < 30; ++i) {
        const Graph g = random_graph(7, 0.8, rng.next());
        std::vector<EdgeId> types;
        for (std::size_t e = 0; e < g.size(); ++e) types.push_back(static_cast<EdgeId>(rng.below(3)));
        const TypedGraph t(g, k3, types);
        const auto untyped = arrow_decide(g, std::vector<Graph>{graphs::complete(3), graphs::complete(3)});
        if (!untyped.arrows()) CHECK_FALSE(typed_arrow_decide(t, others).arrows());
    }
}

TEST_CASE("verification of colourings") {
    const Graph k3 = graphs::complete(3);
    CHECK_FALSE(verify_non_arrow(k3, std::vector<Graph>{k3, k3}, Colouring{1, 1, 1}));
    CHECK(verify_non_arrow(k3, std::vector<Graph>{k3, k3}, Colouring{1, 2, 1}));
    CHECK_THROWS_AS(verify_non_arrow(k3, std::vector<Graph>{k3, k3}, Colouring{1, 3, 1}), DomainError);
    CHECK_THROWS_AS(verify_non_arrow(k3, std::vector<Graph>{k3, k3}, Colouring{1, 2}), DomainError);
}
