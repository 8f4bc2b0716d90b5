#include <filesystem>
#include <random>
#include <set>

#include "altcycles/corpus.hpp"
#include "altcycles/dot.hpp"
#include "altcycles/families.hpp"
#include "altcycles/orient.hpp"
#include "altcycles/serialize.hpp"
#include "altcycles/suite.hpp"
#include "helpers.hpp"

using namespace altcycles;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("altcycles-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};
}

TEST_CASE("labels round-trip through JSON")
{
    std::vector<VertexLabel> labels{VertexLabel::integer(-3), VertexLabel::set({1, 4}), VertexLabel::apex(),
        VertexLabel::pair(2, 1), VertexLabel::level(VertexLabel::level(VertexLabel::set({2}), 1), 0)};
    for (const auto & l : labels) {
        CHECK(label_from_json(json::parse(label_to_json(l).dump())) == l);
        CHECK(label_from_json(json::parse(label_key(l))) == l);
    }
    CHECK_ERROR_KIND(label_from_json(json("nope")), ErrorKind::ParseError);
    CHECK_ERROR_KIND(label_from_json(json{{"set", {3, 1}}}), ErrorKind::ParseError);
    CHECK_ERROR_KIND(label_from_json(json{{"pair", {2, 2}}}), ErrorKind::ParseError);
    CHECK_ERROR_KIND(label_from_json(json{{"int", "x"}}), ErrorKind::ParseError);
    CHECK_ERROR_KIND(label_from_json(json{{"int", 1}, {"set", {1}}}), ErrorKind::ParseError);
}

TEST_CASE("graphs, orientations, colourings and certificates round-trip")
{
    Graph g = generalized_mycielskian(kneser(5, 2), 2);
    CHECK(graph_from_json(json::parse(graph_to_json(g).dump())) == g);

    auto o = orient_increasing(testing::shared(g)).reversed();
    CHECK(orientation_from_json(orientation_to_json(o)) == o);

    Coloring c(std::vector<int>(g.order(), 0));
    CHECK(coloring_from_json(g, coloring_to_json(g, c)) == c);

    auto cyc = testing::cyclic_triangle();
    NodeBudget budget;
    auto cert = alternating_verdict(cyc, budget);
    auto back = certificate_from_json(cyc.base(), certificate_to_json(cyc.base(), cert));
    CHECK(back.coloring() == cert.coloring());
    auto tr = testing::transitive_triangle();
    auto cert2 = alternating_verdict(tr, budget);
    CHECK(certificate_from_json(tr.base(), certificate_to_json(tr.base(), cert2)).cycle() == cert2.cycle());

    CHECK_ERROR_KIND(graph_from_json(json{{"vertices", json::array()}}), ErrorKind::ParseError);
    CHECK_ERROR_KIND(graph_from_json(json::parse(R"({"vertices":[{"int":0}],"edges":[[{"int":0},{"int":0}]]})")),
        ErrorKind::SelfLoop);
    CHECK_ERROR_KIND(certificate_from_json(tr.base(), json{{"verdict", "maybe"}}), ErrorKind::ParseError);
}

TEST_CASE("reports without a family spec embed the graph")
{
    auto r = three_color_orientation(testing::shared(cycle(5)), Coloring({0, 1, 0, 1, 2}));
    auto j = report_to_json(r);
    CHECK(j.at("graph").is_object());
    auto back = report_from_json(j);
    CHECK(back.orientation == r.orientation);
    CHECK(back.checks == r.checks);
}

TEST_CASE("files and loaders")
{
    TempDir tmp;
    auto path = tmp.path / "report.json";
    NodeBudget budget;
    auto r = schrijver4_construction(2, budget);
    write_text_file(path, report_to_json(r).dump());
    CHECK_FALSE(fs::exists(tmp.path / "report.json.tmp"));
    CHECK(load_graph(path.string()) == schrijver(6, 2));
    CHECK(load_orientation(path.string()) == r.orientation);
    CHECK(load_graph("kneser:5,2") == kneser(5, 2));

    auto gpath = tmp.path / "graph.json";
    write_text_file(gpath, graph_to_json(cycle(7)).dump());
    CHECK(load_graph(gpath.string()) == cycle(7));

    write_text_file(tmp.path / "broken.json", "{\"graph\": ");
    CHECK_ERROR_KIND(load_graph((tmp.path / "broken.json").string()), ErrorKind::ParseError);
    CHECK_ERROR_KIND(load_orientation((tmp.path / "missing.json").string()), ErrorKind::IoError);
    CHECK_ERROR_KIND(write_text_file(tmp.path / "no" / "such" / "dir.json", "x"), ErrorKind::IoError);
    CHECK_ERROR_KIND(load_graph("not-a-family"), ErrorKind::ParseError);
}

TEST_CASE("DOT output")
{
    Graph p = kneser(5, 2);
    auto text = to_dot(p);
    CHECK(text.rfind("graph", 0) == 0);
    CHECK(text.find("--") != std::string::npos);
    CHECK(text.find("->") == std::string::npos);
    CHECK(text == to_dot(kneser(5, 2)));

    NodeBudget budget;
    auto r = schrijver4_construction(2, budget);
    auto d = to_dot(r.orientation, &*r.coloring);
    CHECK(d.rfind("digraph", 0) == 0);
    CHECK(d.find("->") != std::string::npos);
    CHECK(d.find("fillcolor") != std::string::npos);
    CHECK(d.find("c3") != std::string::npos);
    CHECK(d == to_dot(r.orientation, &*r.coloring));

    TempDir tmp;
    export_dot(r.orientation, &*r.coloring, tmp.path / "s.dot");
    CHECK(read_text_file(tmp.path / "s.dot") == d);
    CHECK_ERROR_KIND(export_dot(p, nullptr, tmp.path / "missing" / "p.dot"), ErrorKind::IoError);
}

TEST_CASE("random corpus is reproducible")
{
    auto a = random_digraph_corpus(50, 10, 42);
    auto b = random_digraph_corpus(50, 10, 42);
    auto c = random_digraph_corpus(50, 10, 43);
    REQUIRE(a.size() == 50);
    bool differs = false;
    std::set<int> orders;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        differs |= ! (a[i] == c[i]);
        orders.insert(a[i].base().order());
        CHECK(a[i].base().order() >= 2);
        CHECK(a[i].base().order() <= 10);
    }
    CHECK(differs);
    CHECK(orders.size() > 4);
    auto one = random_digraph_corpus(1, 3, 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].base().order() <= 3);
    CHECK_ERROR_KIND(random_digraph_corpus(3, 13, 1), ErrorKind::BadParameters);
    CHECK_ERROR_KIND(random_digraph_corpus(3, 0, 1), ErrorKind::BadParameters);
}

TEST_CASE("suite catalogue")
{
    const auto & items = suite_catalog();
    REQUIRE(items.size() == 15);
    std::set<std::string> ids;
    for (std::size_t i = 0; i < items.size(); ++i) {
        CHECK(items[i].criterion == static_cast<int>(i) + 1);
        CHECK(items[i].time_limit_seconds > 0);
        CHECK(items[i].budget > 0);
        CHECK(input_hash(items[i]).size() == 16);
        ids.insert(items[i].id);
    }
    CHECK(ids.size() == 15);
    CHECK(items.back().optional);
    CHECK(input_hash(items[0]) == input_hash(suite_catalog()[0]));
    CHECK(input_hash(items[0]) != input_hash(items[1]));

    auto s4 = select_items("s4-*");
    REQUIRE(s4.size() == 2);
    CHECK(s4[0]->criterion == 4);
    CHECK(s4[1]->criterion == 5);
    CHECK(select_items("").size() == 15);
    CHECK(select_items("nothing-*").empty());
}

TEST_CASE("suite runs, caches and reports")
{
    TempDir tmp;
    SuiteOptions opts;
    opts.filter = "s4-*";
    opts.jobs = 2;
    opts.cache_dir = tmp.path;
    auto first = run_suite(opts);
    REQUIRE(first.records.size() == 2);
    for (const auto & r : first.records) {
        CHECK(r.verdict == Verdict::Pass);
        CHECK_FALSE(r.from_cache);
        CHECK(fs::exists(tmp.path / (r.id + ".json")));
    }
    CHECK(first.exit_code() == 0);

    auto second = run_suite(opts);
    for (const auto & r : second.records)
        CHECK(r.from_cache);
    CHECK(second.records[0].certificate == first.records[0].certificate);

    fs::remove(tmp.path / (first.records[0].id + ".json"));
    auto third = run_suite(opts);
    CHECK_FALSE(third.records[0].from_cache);
    CHECK(third.records[1].from_cache);

    // a stale hash is ignored
    auto rec = record_from_json(read_json_file(tmp.path / (first.records[1].id + ".json")));
    rec.input_hash = "0000000000000000";
    write_text_file(tmp.path / (rec.id + ".json"), record_to_json(rec).dump());
    CHECK_FALSE(run_suite(opts).records[1].from_cache);

    auto j = first.to_json();
    CHECK(j.at("exit_code") == 0);
    CHECK(j.at("items").size() == 2);
}

TEST_CASE("records round-trip and verdicts map to exit codes")
{
    ResultRecord r{"x", 3, Verdict::Timeout, "ran out", json{{"nodes", 5}}, 1.5, "00000000000000ff", false};
    auto back = record_from_json(record_to_json(r));
    CHECK(back.id == r.id);
    CHECK(back.criterion == 3);
    CHECK(back.verdict == Verdict::Timeout);
    CHECK(back.certificate == r.certificate);
    CHECK(back.seconds == doctest::Approx(1.5));
    CHECK(back.input_hash == r.input_hash);

    SuiteReport rep;
    CHECK(rep.exit_code() == 0);
    rep.records.push_back(r);
    CHECK(rep.exit_code() == 3);
    r.verdict = Verdict::Fail;
    rep.records.push_back(r);
    CHECK(rep.exit_code() == 1);
    CHECK(to_string(Verdict::Pass) == "pass");
}

TEST_CASE("run_item turns budget exhaustion into a timeout")
{
    SuiteItem item{"tiny", 0, "", "", 5, 10.0, false, [](NodeBudget & b) {
                       for (;;)
                           b.tick();
                       return ItemOutcome{};
                   }};
    auto r = run_item(item);
    CHECK(r.verdict == Verdict::Timeout);
    SuiteItem failing{"boom", 0, "", "", 5, 10.0, false,
        [](NodeBudget &) -> ItemOutcome { throw Error(ErrorKind::BadParameters, "boom"); }};
    CHECK(run_item(failing).verdict == Verdict::Fail);
}

TEST_CASE("suite items are reproducible")
{
    for (const auto * item : select_items("*-partition")) {
        auto a = run_item(*item), b = run_item(*item);
        CHECK(a.verdict == b.verdict);
        CHECK(a.certificate == b.certificate);
        CHECK(a.input_hash == b.input_hash);
    }
}
