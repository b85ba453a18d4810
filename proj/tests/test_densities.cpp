#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramsey/densities.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/rng.hpp"
#include "zoo.hpp"

using namespace ramsey;
using namespace testing_support;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Graph k4_with_pendant() { return graphs::with_pendant(graphs::complete(4), 0); }

} // namespace

TEST_CASE("d2 of small graphs") {
    CHECK(d2(graphs::complete(2)) == q(1, 2));
    CHECK(d2(graphs::complete(3)) == 2);
    CHECK(d2(graphs::complete(4)) == q(5, 2));
    CHECK(d2(graphs::cycle(4)) == q(3, 2));
    CHECK(d2(graphs::path(2)) == 1);
    CHECK(d2(Graph(7, {{2, 5}})) == q(1, 2));
    CHECK_THROWS_AS(d2(Graph(3)), DomainError);
}

TEST_CASE("m2 fixtures") {
    CHECK(m2(graphs::complete(3)).value == 2);
    CHECK(m2(graphs::complete(5)).value == 3);
    CHECK(m2(graphs::cycle(5)).value == q(4, 3));
    CHECK(m2(graphs::star(4)).value == 1);
    CHECK(m2(graphs::matching(3)).value == q(1, 2));
    CHECK(m2(k4_with_pendant()).value == q(5, 2));
    CHECK(m2(k4_with_pendant()).unique);
}

TEST_CASE("m2 reports every maximizer") {
    const auto r = m2(graphs::disjoint_union(graphs::complete(3), graphs::complete(3)));
    CHECK(r.value == 2);
    CHECK(r.maximizers.size() == 2);
    CHECK_FALSE(r.unique);
}

TEST_CASE("asymmetric density fixtures") {
    const Graph k3 = graphs::complete(3);
    CHECK(m2_asym(k3, k3).value == 2);
    CHECK(m2_asym(graphs::complete(4), k3).value == q(12, 5));
    CHECK(m2_asym(k4_with_pendant(), k3).value == q(12, 5));
    CHECK(m2_asym(graphs::complete(4), graphs::complete(2)).value == q(3, 2));
    CHECK_THROWS_AS(m2_asym(k3, graphs::complete(4)), DensityOrderError);
    CHECK(asym_ratio(6, 4, 2) == q(12, 5));
}

TEST_CASE("m2_asym lies between m2(F2) and m2(F1)") {
    for (const Graph& f1 : all_nonempty_graphs_up_to(5))
        for (const Graph& f2 : all_nonempty_graphs_up_to(4)) {
            const Rational a = m2(f1).value, b = m2(f2).value;
            if (a < b) continue;
            const Rational m = m2_asym(f1, f2).value;
            CHECK(b <= m);
            CHECK(m <= a);
        }
}

TEST_CASE("balancedness predicates") {
    CHECK(is_2_balanced(graphs::complete(4)));
    CHECK(is_strictly_2_balanced(graphs::complete(4)));
    CHECK(is_strictly_2_balanced(graphs::cycle(5)));
    CHECK_FALSE(is_2_balanced(k4_with_pendant()));
    // A path has m2 = 1 attained by every subpath of length >= 2.
    CHECK(is_2_balanced(graphs::path(3)));
    CHECK_FALSE(is_strictly_2_balanced(graphs::path(3)));
    CHECK(is_strictly_2_balanced(graphs::path(2)));
    // A single edge ties the whole triangle when both densities are equal.
    CHECK_FALSE(is_strictly_balanced_wrt(graphs::complete(3), graphs::complete(3)));
    CHECK(is_strictly_balanced_wrt(graphs::complete(4), graphs::complete(3)));
    CHECK_FALSE(is_strictly_balanced_wrt(k4_with_pendant(), graphs::complete(3)));
}

TEST_CASE("max density fixtures") {
    CHECK(max_density(graphs::complete(5)).value == 2);
    CHECK(max_density(graphs::complete(6)).value == q(5, 2));
    CHECK(max_density(graphs::cycle(7)).value == 1);
    CHECK(max_density(graphs::path(4)).value == q(4, 5));
    CHECK(max_density(k4_with_pendant()).value == q(3, 2));
    CHECK_THROWS_AS(max_density(Graph(4)), DomainError);
}

TEST_CASE("densities agree with the edge-subset oracle on all graphs up to 6 vertices") {
    for (const Graph& g : all_graphs(6)) {
        if (g.empty()) continue;
        CHECK(m2(g).value == oracle_m2(g));
        CHECK(max_density(g).value == oracle_max_density(g));
    }
}

TEST_CASE("m2_asym agrees with the oracle on random pairs") {
    Rng rng(11);
    int checked = 0;
    while (checked < 60) {
        const Graph f1 = random_nonempty_graph(6, 0.6, rng.next());
        const Graph f2 = random_nonempty_graph(5, 0.5, rng.next());
        if (m2(f1).value < m2(f2).value) continue;
        CHECK(m2_asym(f1, f2).value == oracle_m2_asym(f1, f2));
        ++checked;
    }
}

TEST_CASE("isolated vertices do not change any density") {
    const Graph g = random_nonempty_graph(6, 0.5, 4);
    Graph padded(9, g.edges());
    CHECK(m2(padded).value == m2(g).value);
    CHECK(max_density(padded).value == max_density(g).value);
}
