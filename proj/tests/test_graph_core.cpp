#include <random>

#include "altcycles/coloring_search.hpp"
#include "altcycles/embedding.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace altcycles;
using testing::I;
using testing::ints;

TEST_CASE("labels order by kind then payload")
{
    CHECK(I(5) < VertexLabel::set({1}));
    CHECK(VertexLabel::set({1, 3}) < VertexLabel::set({1, 4}));
    CHECK(VertexLabel::set({1, 3}) < VertexLabel::set({2}));
    CHECK(VertexLabel::level(I(0), 1) < VertexLabel::level(I(1), 0));
    CHECK(VertexLabel::level(I(3), 9) < VertexLabel::apex());
    CHECK(VertexLabel::apex() < VertexLabel::pair(1, 2));
    CHECK(VertexLabel::pair(1, 3) < VertexLabel::pair(2, 1));
    CHECK(VertexLabel::level(VertexLabel::set({1, 2}), 0) == VertexLabel::level(VertexLabel::set({1, 2}), 0));
}

TEST_CASE("labels print compactly")
{
    CHECK(I(3).to_string() == "3");
    CHECK(VertexLabel::set({1, 3}).to_string() == "{1,3}");
    CHECK(VertexLabel::level(I(2), 1).to_string() == "(2,1)");
    CHECK(VertexLabel::apex().to_string() == "z");
    CHECK(VertexLabel::pair(1, 2).to_string() == "(1,2)");
}

TEST_CASE("malformed labels are rejected")
{
    CHECK_THROWS(VertexLabel::set({3, 1}));
    CHECK_THROWS(VertexLabel::set({0, 1}));
    CHECK_THROWS(VertexLabel::pair(2, 2));
}

TEST_CASE("make_graph canonicalises and validates")
{
    Graph g = make_graph({I(2), I(0), I(1)}, {{I(2), I(0)}, {I(1), I(0)}, {I(0), I(2)}});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.labels() == std::vector<VertexLabel>{I(0), I(1), I(2)});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.edge_id(2, 0) == 1);
    CHECK(g.edge_id(1, 2) == -1);

    CHECK_ERROR_KIND(make_graph({I(0), I(0)}, {}), ErrorKind::DuplicateVertex);
    CHECK_ERROR_KIND(make_graph({I(0), I(1)}, {{I(0), I(7)}}), ErrorKind::UnknownEndpoint);
    CHECK_ERROR_KIND(make_graph({I(0), I(1)}, {{I(1), I(1)}}), ErrorKind::SelfLoop);
    CHECK_ERROR_KIND(Graph::from_indices({I(1), I(0)}, {}), ErrorKind::DuplicateVertex);
    CHECK_ERROR_KIND(Graph::from_indices(ints(2), {{0, 2}}), ErrorKind::UnknownEndpoint);
}

TEST_CASE("digraphs keep both arcs of a digon")
{
    Digraph d = make_digraph(ints(2), {{I(0), I(1)}, {I(1), I(0)}});
    CHECK(d.arcs().size() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    CHECK(underlying(d).size() == 1);
}

TEST_CASE("orient by rule and by arc list")
{
    auto g = testing::shared(cycle(4));
    auto o = orient(g, [](const VertexLabel & a, const VertexLabel & b) -> std::optional<LabelPair> {
        return a.as_int() % 2 == 0 ? LabelPair{a, b} : LabelPair{b, a};
    });
    for (int v = 0; v < 4; ++v)
        CHECK(o.out_degree(v) == (v % 2 == 0 ? 2 : 0));
    CHECK(o.reversed().reversed() == o);
    CHECK(o.reversed().in_degree(0) == 2);
    CHECK(&underlying(o) == g.get());

    auto rule_none = [](const VertexLabel &, const VertexLabel &) -> std::optional<LabelPair> { return std::nullopt; };
    CHECK_ERROR_KIND(orient(g, rule_none), ErrorKind::IncompleteRule);
    auto rule_foreign = [](const VertexLabel &, const VertexLabel &) -> std::optional<LabelPair> {
        return LabelPair{I(0), I(9)};
    };
    CHECK_ERROR_KIND(orient(g, rule_foreign), ErrorKind::ForeignEdge);

    CHECK_ERROR_KIND(orient(g, std::vector<LabelPair>{{I(0), I(1)}}), ErrorKind::IncompleteRule);
    CHECK_ERROR_KIND(orient(g, std::vector<LabelPair>{{I(0), I(2)}}), ErrorKind::ForeignEdge);
    CHECK_ERROR_KIND(orient(g, std::vector<LabelPair>{{I(0), I(1)}, {I(1), I(0)}}), ErrorKind::ForeignEdge);
}

TEST_CASE("colourings from label maps")
{
    Graph g = cycle(3);
    CHECK(Coloring::from_labels(g, {{I(0), 5}, {I(1), 2}, {I(2), 5}}).canonical().colors() == std::vector<int>{0, 1, 0});
    CHECK_ERROR_KIND(Coloring::from_labels(g, {{I(0), 0}, {I(1), 1}}), ErrorKind::PartialColoring);
    CHECK_ERROR_KIND(Coloring::from_labels(g, {{I(0), 0}, {I(1), 1}, {I(2), 2}, {I(3), 0}}), ErrorKind::UnknownEndpoint);
}

TEST_CASE("proper colourings and local values")
{
    Graph c5 = cycle(5);
    Coloring c({0, 1, 0, 1, 2});
    CHECK(is_proper(c5, c));
    CHECK_FALSE(is_proper(c5, Coloring({0, 1, 0, 1, 0})));
    CHECK(local_value(c5, c) == 3);
    CHECK_ERROR_KIND(is_proper(c5, Coloring({0, 1})), ErrorKind::PartialColoring);
    CHECK_ERROR_KIND(local_value(c5, Coloring({0, 0, 1, 0, 1})), ErrorKind::ImproperColoring);

    auto cyc = testing::cyclic_triangle();
    CHECK(directed_local_value(cyc, Coloring({0, 1, 2})) == 2);
    CHECK(directed_local_value(testing::transitive_triangle(), Coloring({0, 1, 2})) == 3);
    CHECK(directed_local_value(cyc.to_digraph(), Coloring({0, 1, 2})) == 2);
    CHECK_ERROR_KIND(directed_local_value(cyc, Coloring({0, 0, 1})), ErrorKind::ImproperColoring);
}

TEST_CASE("s-wide colourings")
{
    Graph c5 = cycle(5);
    Coloring c({0, 1, 0, 1, 2});
    CHECK(is_s_wide(c5, c, 1));
    CHECK_FALSE(is_s_wide(c5, c, 2));
    CHECK_ERROR_KIND(is_s_wide(c5, c, 0), ErrorKind::BadParameters);

    Graph c9 = cycle(9);
    std::vector<int> rep;
    for (int v = 0; v < 9; ++v)
        rep.push_back(v % 3);
    CHECK(is_s_wide(c9, Coloring(rep), 1) == ! oracle::has_monochromatic_walk(c9, rep, 1));
    CHECK(is_s_wide(c9, Coloring(rep), 2) == ! oracle::has_monochromatic_walk(c9, rep, 3));
}

TEST_CASE("1-wide is the same as proper on random graphs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(rng, n, 0.4);
        std::vector<int> colors(n);
        for (auto & x : colors)
            x = static_cast<int>(rng() % 3);
        Coloring c(colors);
        CHECK(is_s_wide(g, c, 1) == is_proper(g, c));
    }
}

TEST_CASE("s-wide agrees with the walk-matrix oracle")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n, 0.35);
        auto c = dsatur_coloring(g);
        for (int s = 1; s <= 3; ++s)
            CHECK(is_s_wide(g, c, s) == ! oracle::has_monochromatic_walk(g, c.colors(), 2 * s - 1));
    }
}

TEST_CASE("chromatic number matches the subset oracle")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
        NodeBudget budget;
        int chi = chromatic_number(g, budget);
        CHECK(chi == oracle::chromatic_number(g));
        auto c = find_k_coloring(g, chi, budget);
        REQUIRE(c.has_value());
        CHECK(is_proper(g, *c));
        CHECK(c->num_colors() <= chi);
        if (chi > 1)
            CHECK_FALSE(find_k_coloring(g, chi - 1, budget).has_value());
    }
}

TEST_CASE("chromatic numbers of named graphs")
{
    CHECK(chromatic_number(complete(5)) == 5);
    CHECK(chromatic_number(cycle(7)) == 3);
    CHECK(chromatic_number(cycle(8)) == 2);
    CHECK(chromatic_number(grotzsch()) == 4);
    CHECK(chromatic_number(kneser(5, 2)) == 3);
    CHECK(chromatic_number(Graph::from_indices(ints(3), {})) == 1);
    CHECK(greedy_clique_bound(complete(4)) == 4);
}

TEST_CASE("chromatic number reports bounds when the budget runs out")
{
    NodeBudget budget(3);
    try {
        chromatic_number(kneser(8, 3), budget);
        FAIL("expected the budget to run out");
    }
    catch (const BudgetExceeded & e) {
        REQUIRE(e.lower_bound().has_value());
        REQUIRE(e.upper_bound().has_value());
        CHECK(*e.lower_bound() <= 4);
        CHECK(*e.upper_bound() >= 4);
    }
}

TEST_CASE("local chromatic number matches the partition oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(rng, n, 0.5);
        if (g.size() == 0)
            continue;
        NodeBudget budget;
        CHECK(local_chromatic_number(g, budget) == oracle::local_chromatic_number(g));
    }
    NodeBudget budget;
    CHECK(local_chromatic_number(cycle(5), budget) == 3);
    CHECK(local_chromatic_number(complete(4), budget) == 4);
}

TEST_CASE("subgraph embeddings and isomorphisms")
{
    NodeBudget budget;
    Graph c5 = cycle(5), petersen = kneser(5, 2);
    auto emb = find_subgraph_embedding(c5, petersen, budget);
    REQUIRE(emb.has_value());
    for (auto [u, v] : c5.edges())
        CHECK(petersen.adjacent((*emb)[u], (*emb)[v]));
    CHECK_FALSE(find_subgraph_embedding(complete(3), petersen, budget).has_value());
    CHECK(are_isomorphic(generalized_mycielskian(complete(2), 2), cycle(5)));
    CHECK_FALSE(are_isomorphic(cycle(6), moebius(6)));
    CHECK(are_isomorphic(moebius(6), Graph::from_indices(ints(6), {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                                                       {2, 3}, {2, 4}, {2, 5}})));
}

TEST_CASE("orientation and value invariants on random graphs")
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n, 0.4);
        CHECK(make_graph(g.labels(), [&] {
            std::vector<LabelPair> e;
            for (auto [u, v] : g.edges())
                e.emplace_back(g.label(v), g.label(u));
            return e;
        }()) == g);

        std::vector<bool> fwd;
        for (int e = 0; e < g.size(); ++e)
            fwd.push_back(rng() & 1);
        Orientation o(testing::shared(g), fwd);
        int out_sum = 0;
        for (int v = 0; v < n; ++v) {
            CHECK(o.in_degree(v) + o.out_degree(v) == g.degree(v));
            out_sum += o.out_degree(v);
        }
        CHECK(out_sum == g.size());

        auto c = dsatur_coloring(g);
        int dlv = directed_local_value(o, c);
        CHECK(dlv <= local_value(g, c));
        if (g.size() > 0)
            CHECK(dlv >= 2);
    }
}

TEST_CASE("Kneser chromatic numbers up to 60 vertices")
{
    for (int n = 2; n <= 11; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            Graph g = kneser(n, k);
            if (g.order() > 60)
                continue;
            CHECK_MESSAGE(chromatic_number(g) == n - 2 * k + 2, "kneser(" << n << "," << k << ")");
        }
}
