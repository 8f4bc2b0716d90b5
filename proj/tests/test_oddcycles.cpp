#include <random>

#include "altcycles/corpus.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "altcycles/oddcycles.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace altcycles;
using testing::orient_ints;

namespace {
auto random_orientation(std::mt19937_64 & rng, const Graph & g) -> Orientation
{
    std::vector<bool> forward;
    for (int e = 0; e < g.size(); ++e)
        forward.push_back(rng() & 1);
    return Orientation(testing::shared(g), forward);
}
}

TEST_CASE("odd girth of named graphs")
{
    CHECK(odd_girth(cycle(5)) == 5);
    CHECK_FALSE(odd_girth(cycle(6)).has_value());
    CHECK(odd_girth(kneser(8, 3)) == 5);
    CHECK(odd_girth(kneser(7, 3)) == 7);
    CHECK(odd_girth(schrijver(12, 5)) == 7);
    CHECK(odd_girth(complete(4)) == 3);
    CHECK(is_bipartite(moebius(6)));
    CHECK_FALSE(is_bipartite(moebius(8)));
}

TEST_CASE("odd girth of Kneser and Schrijver graphs follows the closed form")
{
    for (int n = 3; n <= 10; ++n)
        for (int k = 1; 2 * k < n; ++k) {
            int d = n - 2 * k;
            int expected = 2 * ((k + d - 1) / d) + 1;
            CHECK(odd_girth(kneser(n, k)) == expected);
            CHECK(odd_girth(schrijver(n, k)) == expected);
        }
}

TEST_CASE("shortest odd cycles of small graphs")
{
    NodeBudget budget;
    auto c5 = enumerate_shortest_odd_cycles(cycle(5), budget);
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(enumerate_shortest_odd_cycles(kneser(5, 2), budget).size() == 12);
    CHECK(enumerate_shortest_odd_cycles(complete(4), budget).size() == 4);
    CHECK_ERROR_KIND(enumerate_shortest_odd_cycles(cycle(8), budget), ErrorKind::BadParameters);
}

TEST_CASE("cycle enumeration matches the subset-DP count")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(rng, n, 0.45);
        CHECK(odd_girth(g) == oracle::odd_girth(g));
        for (int len = 3; len <= n; ++len) {
            NodeBudget budget;
            auto cycles = enumerate_cycles(g, len, budget);
            CHECK(cycles.size() == oracle::count_cycles(g, len));
            for (const auto & c : cycles) {
                CHECK(c == canonical_cycle(c.vertices));
                validate_cycle(g, c);
            }
            CHECK(std::is_sorted(cycles.begin(), cycles.end()));
        }
    }
}

TEST_CASE("canonical cycles")
{
    CHECK(canonical_cycle({3, 1, 4, 2, 0}).vertices == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(canonical_cycle({0, 1, 2}) == canonical_cycle({2, 1, 0}));
    Graph c5 = cycle(5);
    CHECK_ERROR_KIND(validate_cycle(c5, Cycle{{0, 1, 3}}), ErrorKind::ForeignCycle);
    CHECK_ERROR_KIND(validate_cycle(c5, Cycle{{0, 1}}), ErrorKind::ForeignCycle);
    CHECK_ERROR_KIND(validate_cycle(c5, Cycle{{0, 1, 2, 3, 4, 0}}), ErrorKind::ForeignCycle);
    CHECK_ERROR_KIND(validate_cycle(c5, Cycle{{0, 1, 2, 3, 9}}), ErrorKind::ForeignCycle);
}

TEST_CASE("alternation profiles")
{
    Graph c5 = cycle(5);
    // sources 2 and 4, sinks 1 and 3, vertex 0 mixed
    auto o = orient_ints(c5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}});
    Cycle c{{0, 1, 2, 3, 4}};
    auto p = alternation_profile(o, c);
    CHECK(p.sources == 2);
    CHECK(p.sinks == 2);
    CHECK(p.mixed == std::vector<int>{0});
    CHECK(is_alternating(o, c));

    auto cyc = testing::cyclic_triangle();
    auto pc = alternation_profile(cyc, Cycle{{0, 1, 2}});
    CHECK(pc.mixed.size() == 3);
    CHECK_FALSE(is_alternating(cyc, Cycle{{0, 1, 2}}));
    CHECK(is_alternating(testing::transitive_triangle(), Cycle{{0, 1, 2}}));
    CHECK_ERROR_KIND(alternation_profile(cyc, Cycle{{0, 1}}), ErrorKind::ForeignCycle);
}

TEST_CASE("an alternating cycle of length l has (l-1)/2 sources and sinks each")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.5);
        if (! odd_girth(g))
            continue;
        auto o = random_orientation(rng, g);
        NodeBudget budget;
        for (const auto & c : enumerate_shortest_odd_cycles(g, budget)) {
            if (! is_alternating(o, c))
                continue;
            auto p = alternation_profile(o, c);
            CHECK(p.sources == c.length() / 2);
            CHECK(p.sinks == c.length() / 2);
        }
    }
}

TEST_CASE("alternating search agrees with brute force")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n, 0.45);
        auto o = random_orientation(rng, g);
        NodeBudget budget;
        auto cyc = find_alternating_odd_cycle(o, budget);
        CHECK(cyc.has_value() == oracle::has_alternating_odd_cycle(o));
        if (cyc) {
            validate_cycle(g, *cyc);
            CHECK(is_alternating(o, *cyc));
        }
        auto col = certify_no_alternating_odd_cycle(o, budget);
        CHECK(col.has_value() == oracle::has_value_two_coloring(o));
        if (col)
            CHECK(directed_local_value(o, *col) <= 2);
    }
}

TEST_CASE("exactly one certificate per orientation on the seeded corpus")
{
    auto corpus = random_digraph_corpus(200, 10, 7);
    int cycles = 0;
    for (const auto & o : corpus) {
        NodeBudget budget;
        auto cert = alternating_verdict(o, budget);
        CHECK(verify_certificate(o, cert));
        cycles += cert.found_cycle();
        CHECK(cert.found_cycle() == find_alternating_odd_cycle(o, budget).has_value());
    }
    CHECK(cycles > 0);
    CHECK(cycles < 200);
}

TEST_CASE("certificates are re-checked, not trusted")
{
    auto cyc = testing::cyclic_triangle();
    CHECK_FALSE(verify_certificate(cyc, Certificate{Cycle{{0, 1, 2}}}));
    CHECK(verify_certificate(cyc, Certificate{Coloring({0, 1, 2})}));
    CHECK_FALSE(verify_certificate(cyc, Certificate{Coloring({0, 0, 1})}));
    auto tr = testing::transitive_triangle();
    CHECK(verify_certificate(tr, Certificate{Cycle{{0, 1, 2}}}));
    CHECK_FALSE(verify_certificate(tr, Certificate{Coloring({0, 1, 2})}));
    NodeBudget budget;
    CHECK(alternating_verdict(cyc, budget).coloring().size() == 3);
}

TEST_CASE("an acyclic orientation of a graph with triangles makes every triangle alternating")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.6);
        if (odd_girth(g) != 3)
            continue;
        auto o = orient_increasing(testing::shared(g));
        NodeBudget budget;
        auto check = all_shortest_odd_cycles_alternating(o, budget);
        CHECK(check.all_alternating);
        CHECK(check.cycles_checked == static_cast<int>(oracle::count_cycles(g, 3)));
    }
}

TEST_CASE("shortest-cycle check reports a counterexample")
{
    Graph c5 = cycle(5);
    auto o = orient_increasing(testing::shared(c5));
    NodeBudget budget;
    auto r = all_shortest_odd_cycles_alternating(o, budget);
    // 0->1->2->3->4 and 0->4: 0 is a source, 4 a sink, 1,2,3 mixed
    CHECK_FALSE(r.all_alternating);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.cycles_checked == 1);
    CHECK(all_alternating(o, {}).all_alternating);
}

TEST_CASE("budgets bound the searches")
{
    auto o = orient_increasing(testing::shared(kneser(8, 3)));
    NodeBudget tiny(5);
    CHECK_THROWS_AS(enumerate_shortest_odd_cycles(kneser(8, 3), tiny), BudgetExceeded);
    NodeBudget tiny2(5);
    CHECK_THROWS_AS(certify_no_alternating_odd_cycle(o, tiny2), BudgetExceeded);
}

TEST_CASE("duality holds on orientations with up to 12 vertices")
{
    auto corpus = random_digraph_corpus(60, 12, 99);
    for (const auto & o : corpus) {
        NodeBudget budget;
        auto cyc = find_alternating_odd_cycle(o, budget);
        auto col = certify_no_alternating_odd_cycle(o, budget);
        CHECK(cyc.has_value() != col.has_value());
        if (cyc)
            CHECK((is_alternating(o, *cyc) && cyc->length() % 2 == 1));
        if (col) {
            CHECK(is_proper(o.base(), *col));
            CHECK(directed_local_value(o, *col) <= 2);
        }
    }
}
