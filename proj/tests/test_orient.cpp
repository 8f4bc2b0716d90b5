#include <random>
#include <set>

#include "altcycles/coloring_search.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "altcycles/orient.hpp"
#include "altcycles/serialize.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace altcycles;
using testing::shared;

TEST_CASE("three-colour orientation")
{
    auto c5 = shared(cycle(5));
    auto r = three_color_orientation(c5, Coloring({0, 1, 0, 1, 2}));
    CHECK(r.all_passed());
    CHECK(directed_local_value(r.orientation, *r.coloring) == 2);
    NodeBudget budget;
    CHECK(verify_report(r, budget));

    auto k3 = shared(complete(3));
    auto t = three_color_orientation(k3, Coloring({0, 1, 2}));
    CHECK(t.orientation.has_arc(0, 1));
    CHECK(t.orientation.has_arc(1, 2));
    CHECK(t.orientation.has_arc(2, 0));

    auto k2 = three_color_orientation(shared(complete(2)), Coloring({0, 1}));
    CHECK(k2.orientation.arcs() == std::vector<std::pair<int, int>>{{0, 1}});

    CHECK_ERROR_KIND(three_color_orientation(k3, Coloring({0, 0, 1})), ErrorKind::ImproperColoring);
    CHECK_ERROR_KIND(three_color_orientation(shared(complete(4)), Coloring({0, 1, 2, 3})), ErrorKind::TooManyColors);
    // any three distinct values are accepted
    CHECK(three_color_orientation(k3, Coloring({7, 3, 5})).all_passed());
}

TEST_CASE("three-colour orientations never contain an alternating odd cycle")
{
    std::mt19937_64 rng(41);
    int tried = 0;
    for (int trial = 0; trial < 200 && tried < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n, 0.35);
        if (g.size() == 0)
            continue;
        NodeBudget budget;
        auto c = find_k_coloring(g, 3, budget);
        if (! c)
            continue;
        ++tried;
        auto r = three_color_orientation(shared(g), *c);
        CHECK(r.all_passed());
        CHECK_FALSE(oracle::has_alternating_odd_cycle(r.orientation));
        CHECK(directed_local_value(r.orientation, *r.coloring) <= 2);
    }
    CHECK(tried >= 30);
}

TEST_CASE("pullback along a colouring matches the three-colour construction")
{
    auto cyc = testing::cyclic_triangle();
    Digraph k3 = cyc.to_digraph();
    for (Graph g : {cycle(5), kneser(5, 2)}) {
        auto gp = shared(g);
        NodeBudget budget;
        auto c = find_k_coloring(g, 3, budget);
        REQUIRE(c.has_value());
        auto direct = three_color_orientation(gp, *c);
        auto pulled = pullback_orientation(gp, k3, HomomorphismMap{c->colors()});
        CHECK(pulled.orientation == direct.orientation);
    }
    // identity on the cyclic triangle
    auto id = pullback_orientation(cyc.base_ptr(), k3, HomomorphismMap{{0, 1, 2}});
    CHECK(id.orientation == cyc);
    CHECK_ERROR_KIND(pullback_orientation(cyc.base_ptr(), k3, HomomorphismMap{{0, 0, 1}}),
        ErrorKind::NotAHomomorphism);
    CHECK_ERROR_KIND(pullback_orientation(cyc.base_ptr(), k3, HomomorphismMap{{0, 1}}), ErrorKind::PartialMap);
}

TEST_CASE("pullback into a directed shift graph yields a value-2 colouring")
{
    Graph sg = schrijver(6, 2);
    auto hom = find_homomorphism(sg, shift_graph(4));
    REQUIRE(hom.has_value());
    auto r = pullback_orientation(shared(sg), directed_shift_graph(4), *hom);
    REQUIRE(r.coloring.has_value());
    CHECK(r.coloring->num_colors() <= 4);
    CHECK(directed_local_value(r.orientation, *r.coloring) == 2);
    CHECK(r.all_passed());
}

TEST_CASE("source orientation of Kneser graphs")
{
    struct Case {
        int m, k, cycles;
    };
    // K_3, the twelve Petersen 5-cycles, and the fifteen triangles of KG(6,2)
    for (auto [m, k, cycles] : {Case{1, 1, 1}, Case{1, 2, 12}, Case{2, 1, 15}}) {
        for (int j : {1, 2}) {
            auto r = source_orientation_kneser(m, k, j);
            CHECK(r.all_passed());
            const Check * s = r.find_check(check_names::shortest_alternating);
            REQUIRE(s != nullptr);
            CHECK(s->passed);
            CHECK(s->value == cycles);
            const Graph & g = r.graph();
            for (int v = 0; v < g.order(); ++v) {
                const auto & e = g.label(v).elements();
                if (std::find(e.begin(), e.end(), j) != e.end())
                    CHECK(r.orientation.in_degree(v) == 0);
            }
        }
    }
    auto k3 = source_orientation_kneser(1, 1, 1);
    NodeBudget budget;
    CHECK(find_alternating_odd_cycle(k3.orientation, budget).has_value());
    CHECK_ERROR_KIND(source_orientation_kneser(0, 1, 1), ErrorKind::BadParameters);
    CHECK_ERROR_KIND(source_orientation_kneser(1, 2, 6), ErrorKind::BadParameters);
}

TEST_CASE("seeded tie rules keep the verified properties")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto r = source_orientation_kneser(1, 2, 3, TieRule{seed});
        CHECK(r.all_passed());
        CHECK(r.find_check(check_names::shortest_alternating) != nullptr);
    }
    auto a = source_orientation_kneser(2, 1, 1, TieRule{9});
    auto b = source_orientation_kneser(2, 1, 1, TieRule{9});
    CHECK(a.orientation == b.orientation);
}

TEST_CASE("partitions")
{
    Graph c5 = cycle(5);
    NodeBudget budget;
    auto p = find_bipartite_matching_partition(c5, budget);
    REQUIRE(p.has_value());
    validate_partition(c5, *p);
    CHECK(p->matching.size() == 1);
    auto r = partition_orientation(shared(c5), *p);
    CHECK(r.all_passed());

    CHECK_ERROR_KIND(validate_partition(c5, Partition{{0, 1, 2}, {3, 4}, {{0, 1}, {1, 2}}}), ErrorKind::InvalidPartition);
    CHECK_ERROR_KIND(validate_partition(c5, Partition{{0, 2}, {1, 3}, {}}), ErrorKind::InvalidPartition);
    CHECK_ERROR_KIND(validate_partition(c5, Partition{{0, 2, 4}, {1, 3}, {}}), ErrorKind::InvalidPartition);
    CHECK_ERROR_KIND(partition_orientation(shared(c5), Partition{{0, 1, 2}, {3, 4}, {{0, 1}}}),
        ErrorKind::InvalidPartition);

    CHECK(find_bipartite_matching_partition(complete(4), budget).has_value());
    // each side of K_5 would need three vertices
    CHECK_FALSE(find_bipartite_matching_partition(complete(5), budget).has_value());
}

TEST_CASE("partition orientations of Clebsch and Grotzsch")
{
    for (Graph g : {clebsch(), grotzsch()}) {
        NodeBudget budget;
        auto p = find_bipartite_matching_partition(g, budget);
        REQUIRE(p.has_value());
        validate_partition(g, *p);
        auto r = partition_orientation(shared(g), *p, {}, &budget);
        CHECK(r.all_passed());
        REQUIRE(r.find_check(check_names::shortest_alternating) != nullptr);

        // every crossing edge goes A -> B, so same-side vertices agree on being sources or sinks
        std::set<int> a(p->side_a.begin(), p->side_a.end());
        for (auto [u, v] : r.orientation.arcs()) {
            bool matched = std::count(p->matching.begin(), p->matching.end(), std::make_pair(std::min(u, v), std::max(u, v)));
            if (! matched) {
                CHECK(a.count(u));
                CHECK_FALSE(a.count(v));
            }
        }
    }
    Graph cl = clebsch();
    NodeBudget budget;
    auto p = find_bipartite_matching_partition(cl, budget);
    CHECK(p->matching.size() == 8);
    CHECK(cl.size() - static_cast<int>(p->matching.size()) == 32);
}

TEST_CASE("Schrijver four-colouring construction")
{
    for (int k = 2; k <= 4; ++k) {
        NodeBudget budget;
        auto r = schrijver4_construction(k, budget);
        CHECK(r.graph_spec == "schrijver:" + std::to_string(2 * k + 2) + "," + std::to_string(k));
        CHECK(r.all_passed());
        REQUIRE(r.coloring.has_value());
        CHECK(r.coloring->num_colors() == 4);
        CHECK(is_proper(r.graph(), *r.coloring));
        CHECK(directed_local_value(r.orientation, *r.coloring) == 2);
        CHECK(schrijver_structure_holds(r.graph(), k));
        CHECK(verify_report(r, budget));

        auto w = shift_hom_from_report(r);
        CHECK(w.m == 4);
        CHECK(verify_homomorphism(r.graph(), shift_graph(4), w.map));
    }
    NodeBudget budget;
    CHECK_ERROR_KIND(schrijver4_construction(1, budget), ErrorKind::BadParameters);
    CHECK_FALSE(schrijver_structure_holds(kneser(6, 2), 2));
}

TEST_CASE("Mycielski level maps")
{
    Graph k2 = complete(2);
    auto f = mycielski_level_map(k2, 3, 2);
    CHECK(verify_homomorphism(generalized_mycielskian(k2, 3), generalized_mycielskian(k2, 2), f));
    Graph c5 = cycle(5);
    auto g = mycielski_level_map(c5, 4, 2);
    CHECK(verify_homomorphism(generalized_mycielskian(c5, 4), generalized_mycielskian(c5, 2), g));
    CHECK_ERROR_KIND(mycielski_level_map(k2, 2, 3), ErrorKind::BadParameters);
    CHECK_ERROR_KIND(mycielski_level_map(k2, 2, 0), ErrorKind::BadParameters);
}

TEST_CASE("Mycielski functor maps")
{
    Graph k2 = complete(2);
    auto id = mycielski_functor_map(k2, k2, HomomorphismMap{{0, 1}}, 2);
    CHECK(id == HomomorphismMap{{0, 1, 2, 3, 4}});

    Graph c7 = generalized_mycielskian(k2, 3), c5 = generalized_mycielskian(k2, 2);
    auto collapse = mycielski_level_map(k2, 3, 2);
    auto lifted = mycielski_functor_map(c7, c5, collapse, 2);
    CHECK(verify_homomorphism(generalized_mycielskian(c7, 2), generalized_mycielskian(c5, 2), lifted));
    CHECK_ERROR_KIND(mycielski_functor_map(k2, k2, HomomorphismMap{{0, 0}}, 2), ErrorKind::NotAHomomorphism);
}

TEST_CASE("report JSON round-trips and re-verifies")
{
    NodeBudget budget;
    auto r = schrijver4_construction(2, budget);
    auto j = report_to_json(r);
    auto back = report_from_json(json::parse(j.dump()));
    CHECK(back.graph_spec == r.graph_spec);
    CHECK(back.orientation == r.orientation);
    CHECK(back.coloring == r.coloring);
    CHECK(back.checks == r.checks);
    CHECK(verify_report(back, budget));

    // tampering with the colouring is caught
    auto bad = back;
    auto colors = bad.coloring->colors();
    colors[0] = colors[bad.graph().neighbors(0)[0]];
    bad.coloring = Coloring(colors);
    CHECK_FALSE(verify_report(bad, budget));
}

TEST_CASE("searching for an orientation with all shortest odd cycles alternating")
{
    NodeBudget budget;
    auto o = search_shortest_alternating_orientation(shared(kneser(5, 2)), budget);
    REQUIRE(o.has_value());
    CHECK(all_shortest_odd_cycles_alternating(*o, budget).all_alternating);
    // a 5-cycle needs one mixed vertex, and every orientation of C_5 has one
    CHECK(search_shortest_alternating_orientation(shared(cycle(5)), budget).has_value());
}

TEST_CASE("matching-edge tie breaks never change the partition verdict")
{
    for (std::string spec : {"clebsch", "grotzsch", "schrijver:8,3"}) {
        auto g = shared(build_graph(parse_family_spec(spec)));
        NodeBudget budget;
        auto p = find_bipartite_matching_partition(*g, budget);
        REQUIRE(p.has_value());
        for (std::uint64_t seed = 1; seed <= 16; ++seed) {
            auto r = partition_orientation(g, *p, TieRule{seed}, &budget);
            const Check * alt = r.find_check(check_names::shortest_alternating);
            REQUIRE(alt != nullptr);
            CHECK_MESSAGE(alt->passed, spec << " seed " << seed);
        }
    }
}
