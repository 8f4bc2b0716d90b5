#include "altcycles/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fnmatch.h>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "altcycles/coloring_search.hpp"
#include "altcycles/corpus.hpp"
#include "altcycles/embedding.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "altcycles/homsearch.hpp"
#include "altcycles/oddcycles.hpp"
#include "altcycles/orient.hpp"
#include "altcycles/serialize.hpp"

namespace altcycles {

auto to_string(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Timeout: return "timeout";
    }
    return "fail";
}

namespace {
    constexpr const char * cache_format = "altcycles-suite-1";

    auto verdict_from_string(const std::string & s) -> Verdict
    {
        if (s == "pass")
            return Verdict::Pass;
        if (s == "timeout")
            return Verdict::Timeout;
        return Verdict::Fail;
    }

    /// Collects requirement failures for one item.
    class Expect {
    public:
        void require(bool ok, const std::string & what)
        {
            if (ok)
                return;
            outcome_.verdict = Verdict::Fail;
            if (! outcome_.detail.empty())
                outcome_.detail += "; ";
            outcome_.detail += what;
        }

        void note(const std::string & text)
        {
            if (outcome_.verdict == Verdict::Pass) {
                if (! outcome_.detail.empty())
                    outcome_.detail += "; ";
                outcome_.detail += text;
            }
        }

        auto certificate() -> nlohmann::json & { return outcome_.certificate; }
        auto done() -> ItemOutcome { return std::move(outcome_); }

    private:
        ItemOutcome outcome_;
    };

    auto shared(Graph g) -> std::shared_ptr<const Graph> { return std::make_shared<const Graph>(std::move(g)); }

    auto str(int x) -> std::string { return std::to_string(x); }

    auto regular_of_degree(const Graph & g, int d) -> bool
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != d)
                return false;
        return true;
    }

    auto config_for(NodeBudget & budget) -> SearchConfig
    {
        SearchConfig cfg;
        cfg.node_budget = budget.remaining();
        return cfg;
    }

    auto family_invariants(NodeBudget &) -> ItemOutcome
    {
        Expect e;
        Graph kg = kneser(6, 2);
        e.require(kg.order() == 15 && kg.size() == 45, "kneser(6,2) has " + str(kg.order()) + "/" + str(kg.size()));
        e.require(kg.size() == 3 * kg.order(), "kneser(6,2) edge count is not three times the vertex count");
        Graph sg = schrijver(6, 2);
        e.require(sg.order() == 9, "schrijver(6,2) has " + str(sg.order()) + " vertices");
        Graph cl = clebsch();
        e.require(cl.order() == 16 && cl.size() == 40, "clebsch has " + str(cl.order()) + "/" + str(cl.size()));
        e.require(regular_of_degree(cl, 5), "clebsch is not 5-regular");
        e.require(odd_girth(cl) != 3, "clebsch has a triangle");
        Graph gr = grotzsch();
        e.require(gr.order() == 11 && gr.size() == 20, "grotzsch has " + str(gr.order()) + "/" + str(gr.size()));
        return e.done();
    }

    auto chromatic_desk(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {6, 2}, {7, 3}, {8, 3}}) {
            int expected = n - 2 * k + 2;
            int kg = chromatic_number(kneser(n, k), budget);
            int sg = chromatic_number(schrijver(n, k), budget);
            e.require(kg == expected, "chi kneser(" + str(n) + "," + str(k) + ") = " + str(kg));
            e.require(sg == expected, "chi schrijver(" + str(n) + "," + str(k) + ") = " + str(sg));
            e.certificate()[str(n) + "," + str(k)] = {kg, sg};
        }
        return e.done();
    }

    auto odd_girth_formula(NodeBudget &) -> ItemOutcome
    {
        Expect e;
        int pairs = 0;
        for (int k = 1; k <= 5; ++k)
            for (int n = 2 * k + 1; n <= 12; ++n) {
                int expected = 2 * ((k + (n - 2 * k) - 1) / (n - 2 * k)) + 1;
                auto kg = odd_girth(kneser(n, k));
                auto sg = odd_girth(schrijver(n, k));
                std::string tag = "(" + str(n) + "," + str(k) + ")";
                e.require(kg == expected, "odd girth kneser" + tag);
                e.require(sg == expected, "odd girth schrijver" + tag);
                ++pairs;
            }
        e.note(str(pairs) + " parameter pairs");
        return e.done();
    }

    auto s4_schrijver(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        for (int k : {2, 3, 4}) {
            auto report = schrijver4_construction(k, budget);
            std::string tag = "k=" + str(k);
            e.require(report.all_passed(), tag + " construction checks failed");
            e.require(report.coloring && report.coloring->num_colors() == 4, tag + " does not use 4 colours");
            e.require(report.coloring && directed_local_value(report.orientation, *report.coloring) == 2,
                tag + " value is not 2");
            e.require(verify_report(report_from_json(report_to_json(report)), budget), tag + " reload failed");
            auto witness = shift_hom_from_report(report);
            e.require(witness.m == 4, tag + " shift witness uses m=" + str(witness.m));
            e.require(verify_homomorphism(report.graph(), shift_graph(4), witness.map), tag + " map into S_4 invalid");
            if (k == 2) {
                e.certificate()["report"] = report_to_json(report);
                e.certificate()["witness"] = witness_to_json(report.graph(), witness);
            }
        }
        return e.done();
    }

    auto s4_kneser_refutation(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        for (int k : {1, 2}) {
            auto result = search_homomorphism(kneser(2 * k + 2, k), shift_graph(4), config_for(budget));
            budget.consume(result.stats.nodes);
            e.require(! result.map, "kneser(" + str(2 * k + 2) + "," + str(k) + ") maps into S_4");
            e.require(result.stats.complete, "search incomplete");
            e.certificate()["k=" + str(k)] = refutation_to_json(result.stats);
        }
        return e.done();
    }

    auto kneser62_s5(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        auto result = search_homomorphism(kneser(6, 2), shift_graph(5), config_for(budget));
        budget.consume(result.stats.nodes);
        e.require(! result.map, "kneser(6,2) maps into S_5");
        e.certificate() = refutation_to_json(result.stats);
        return e.done();
    }

    auto grotzsch_s4(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        Graph gr = grotzsch();
        auto joint = joint_orientation_coloring_search(shared(gr), 4, config_for(budget));
        budget.consume(joint.stats.nodes);
        e.require(joint.report.has_value(), "no value-2 report for grotzsch on 4 colours");
        if (! joint.report)
            return e.done();
        const auto & report = *joint.report;
        e.require(report.all_passed(), "grotzsch report checks failed");
        e.require(report.coloring->num_colors() <= 4, "grotzsch report uses too many colours");
        auto witness = shift_hom_from_report(report);
        e.require(witness.m == 4, "grotzsch witness uses m=" + str(witness.m));
        e.certificate()["report"] = report_to_json(report);
        e.certificate()["witness"] = witness_to_json(gr, witness);

        Graph k2 = complete(2);
        Graph c5 = generalized_mycielskian(k2, 2);
        for (int r1 : {2, 3})
            for (int r2 : {2, 3}) {
                Graph base = generalized_mycielskian(k2, r1);
                HomomorphismMap to_c5;
                if (r1 == 2) {
                    to_c5.image.resize(base.order());
                    std::iota(to_c5.image.begin(), to_c5.image.end(), 0);
                }
                else {
                    to_c5 = mycielski_level_map(k2, r1, 2);
                }
                auto lifted = mycielski_functor_map(base, c5, to_c5, r2);
                HomomorphismMap to_grotzsch = lifted;
                if (r2 == 3)
                    to_grotzsch = lifted.then(mycielski_level_map(c5, 3, 2));
                auto total = to_grotzsch.then(witness.map);
                Graph source = iterated_mycielski({r1, r2});
                e.require(verify_homomorphism(source, shift_graph(4), total),
                    "composed map M_{" + str(r1) + "," + str(r2) + "}(K_2) -> S_4 invalid");
            }
        return e.done();
    }

    auto sweep_all_alternating(Expect & e, const std::string & name, const Graph & g, NodeBudget & budget)
    {
        auto sweep = exhaustive_orientation_check(g, contains_alternating_odd_cycle, budget);
        e.require(sweep.holds_for_all, name + " has an orientation without alternating odd cycles");
        e.certificate()[name] = {{"orientations", sweep.checked}, {"all_contain", sweep.holds_for_all}};
    }

    auto wheels_mycielski(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        sweep_all_alternating(e, "wheel:5", wheel(5), budget);
        sweep_all_alternating(e, "wheel:7", wheel(7), budget);
        sweep_all_alternating(e, "M_2(K_3)", generalized_mycielskian(complete(3), 2), budget);
        return e.done();
    }

    auto rational_threshold(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        sweep_all_alternating(e, "rat:7,2", rational_complete(7, 2), budget);
        auto g = shared(rational_complete(8, 3));
        auto coloring = find_k_coloring(*g, 3, budget);
        e.require(coloring.has_value(), "rat:8,3 is not 3-colourable");
        if (coloring) {
            auto report = three_color_orientation(g, *coloring);
            e.require(report.all_passed(), "three-colour orientation checks failed");
            auto cert = alternating_verdict(report.orientation, budget);
            e.require(! cert.found_cycle(), "three-colour orientation of rat:8,3 has an alternating odd cycle");
            e.certificate()["rat:8,3"] = certificate_to_json(*g, cert);
        }
        return e.done();
    }

    auto kneser_sources(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        for (auto [m, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
            auto report = source_orientation_kneser(m, k, 1, {}, &budget);
            std::string tag = "(m,k)=(" + str(m) + "," + str(k) + ")";
            const Check * alt = report.find_check(check_names::shortest_alternating);
            e.require(alt != nullptr, tag + " shortest-cycle check missing");
            e.require(report.all_passed(), tag + " checks failed");
            if (alt && alt->value)
                e.certificate()[report.graph_spec] = {{"shortest_odd_cycles", *alt->value}};
            if (m == 1 && k == 2)
                e.require(alt && alt->value == 12, "petersen should have 12 five-cycles");
        }
        return e.done();
    }

    /// Every shortest odd cycle of g meets the matching in exactly one edge.
    auto one_matching_edge_per_cycle(const Graph & g, const Partition & p, NodeBudget & budget) -> bool
    {
        std::set<std::pair<int, int>> matching(p.matching.begin(), p.matching.end());
        for (const auto & c : enumerate_shortest_odd_cycles(g, budget)) {
            int hits = 0;
            for (int i = 0; i < c.length(); ++i) {
                int a = c.vertices[i], b = c.vertices[(i + 1) % c.length()];
                hits += matching.contains({std::min(a, b), std::max(a, b)});
            }
            if (hits != 1)
                return false;
        }
        return true;
    }

    auto partition_json(const Graph & g, const Partition & p) -> nlohmann::json
    {
        nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array(), m = nlohmann::json::array();
        for (int v : p.side_a)
            a.push_back(label_to_json(g.label(v)));
        for (int v : p.side_b)
            b.push_back(label_to_json(g.label(v)));
        for (auto [u, v] : p.matching)
            m.push_back(nlohmann::json::array({label_to_json(g.label(u)), label_to_json(g.label(v))}));
        return {{"side_a", a}, {"side_b", b}, {"matching", m}};
    }

    void partition_item(Expect & e, const std::string & spec, NodeBudget & budget, bool require_one_per_cycle)
    {
        auto g = shared(build_graph(parse_family_spec(spec)));
        auto p = find_bipartite_matching_partition(*g, budget);
        e.require(p.has_value(), spec + " has no bipartite-plus-matching partition");
        if (! p)
            return;
        if (require_one_per_cycle)
            e.require(one_matching_edge_per_cycle(*g, *p, budget), spec + " partition misses a shortest odd cycle");
        auto report = partition_orientation(g, *p, {}, &budget);
        report.graph_spec = spec;
        const Check * alt = report.find_check(check_names::shortest_alternating);
        e.require(alt && alt->passed, spec + " orientation leaves a shortest odd cycle non-alternating");
        e.certificate()[spec] = {{"partition", partition_json(*g, *p)},
            {"shortest_odd_cycles", alt && alt->value ? *alt->value : 0}};
    }

    auto clebsch_partition(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        partition_item(e, "clebsch", budget, false);
        auto embedding = find_subgraph_embedding(grotzsch(), clebsch(), budget);
        e.require(embedding.has_value(), "grotzsch does not embed into clebsch");
        if (embedding) {
            HomomorphismMap map{*embedding};
            std::set<int> image(embedding->begin(), embedding->end());
            e.require(image.size() == embedding->size() && verify_homomorphism(grotzsch(), clebsch(), map),
                "embedding is not injective and edge-preserving");
        }
        return e.done();
    }

    auto schrijver_odd_partition(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        partition_item(e, "schrijver:8,3", budget, true);
        partition_item(e, "schrijver:12,5", budget, true);
        return e.done();
    }

    auto duality_corpus(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        auto corpus = random_digraph_corpus(500, 10, 42);
        int cycles = 0, witnesses = 0, bad = 0;
        for (const auto & o : corpus) {
            auto cycle = find_alternating_odd_cycle(o, budget);
            auto witness = certify_no_alternating_odd_cycle(o, budget);
            bool exactly_one = cycle.has_value() != witness.has_value();
            bool verified = (cycle && verify_certificate(o, Certificate{*cycle}))
                || (witness && verify_certificate(o, Certificate{*witness}));
            if (! exactly_one || ! verified)
                ++bad;
            cycles += cycle.has_value();
            witnesses += witness.has_value();
        }
        e.require(bad == 0, str(bad) + " of 500 orientations broke duality");
        e.certificate() = {{"instances", 500}, {"cycles", cycles}, {"witnesses", witnesses}, {"violations", bad}};
        return e.done();
    }

    auto rational_order(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        std::vector<std::pair<int, int>> params;
        for (int q = 1; q <= 3; ++q)
            for (int p = 2 * q; p <= 9; ++p)
                params.emplace_back(p, q);
        int pairs = 0;
        for (auto [p, q] : params)
            for (auto [p2, q2] : params) {
                auto result =
                    search_homomorphism(rational_complete(p, q), rational_complete(p2, q2), config_for(budget));
                budget.consume(result.stats.nodes);
                bool expected = p * q2 <= p2 * q;
                e.require(result.map.has_value() == expected,
                    "rat:" + str(p) + "," + str(q) + " -> rat:" + str(p2) + "," + str(q2));
                ++pairs;
            }
        e.certificate() = {{"pairs", pairs}};
        return e.done();
    }

    auto clebsch_refutation(NodeBudget & budget) -> ItemOutcome
    {
        Expect e;
        Graph cl = clebsch();
        auto result = joint_orientation_coloring_search(shared(cl), cl.order(), config_for(budget));
        budget.consume(result.stats.nodes);
        e.require(! result.report, "clebsch has an orientation with a value-2 colouring");
        e.certificate() = refutation_to_json(result.stats);
        return e.done();
    }

    auto build_catalog() -> std::vector<SuiteItem>
    {
        constexpr std::uint64_t million = 1'000'000;
        return {
            {"families-invariants", 1, "vertex/edge counts of kneser(6,2), schrijver(6,2), clebsch, grotzsch",
                "kneser:6,2 schrijver:6,2 clebsch grotzsch", million, 1, false, family_invariants},
            {"chromatic-kneser-schrijver", 2, "chromatic number n-2k+2 of Kneser and Schrijver graphs",
                "(4,1) (5,2) (6,2) (7,3) (8,3)", 2000 * million, 300, false, chromatic_desk},
            {"odd-girth-formula", 3, "odd girth 2*ceil(k/(n-2k))+1 for n <= 12, k <= 5", "n<=12 k<=5", million, 60,
                false, odd_girth_formula},
            {"s4-schrijver-coloring", 4, "schrijver(2k+2,k) gets a value-2 four-colouring and maps into S_4",
                "k=2,3,4", 100 * million, 60, false, s4_schrijver},
            {"s4-kneser-refutation", 5, "kneser(2k+2,k) has no homomorphism into S_4", "k=1,2", 2000 * million,
                600, false, s4_kneser_refutation},
            {"kneser62-s5-refutation", 6, "kneser(6,2) has no homomorphism into S_5", "kneser:6,2 shift:5",
                6000 * million, 1800, false, kneser62_s5},
            {"grotzsch-s4-witness", 7,
                "grotzsch has a value-2 four-colouring; M_{r1,r2}(K_2) maps into S_4 for r1,r2 in {2,3}",
                "grotzsch r1,r2 in {2,3}", 1000 * million, 300, false, grotzsch_s4},
            {"wheels-mycielski-sweep", 8, "every orientation of W_5, W_7, M_2(K_3) has an alternating odd cycle",
                "wheel:5 wheel:7 M_2(K_3)", 1000 * million, 300, false, wheels_mycielski},
            {"rational-complete-threshold", 9,
                "every orientation of rat:7,2 has an alternating odd cycle; rat:8,3 has a witness colouring",
                "rat:7,2 rat:8,3", 1000 * million, 300, false, rational_threshold},
            {"kneser-source-orientation", 10, "a source element makes all shortest odd cycles alternating",
                "(1,1) (1,2) (1,3) (2,1) j=1", 2000 * million, 600, false, kneser_sources},
            {"clebsch-partition", 11,
                "clebsch splits into a bipartite graph plus a matching orienting all 5-cycles alternating; "
                "grotzsch embeds into clebsch",
                "clebsch grotzsch", 2000 * million, 600, false, clebsch_partition},
            {"schrijver-odd-partition", 12,
                "schrijver(8,3) and schrijver(12,5) split so every shortest odd cycle has one matching edge",
                "schrijver:8,3 schrijver:12,5", 6000 * million, 1800, false, schrijver_odd_partition},
            {"duality-corpus", 13, "exactly one of cycle or witness colouring on 500 random orientations",
                "corpus 500 10 42", 2000 * million, 600, false, duality_corpus},
            {"rational-hom-order", 14, "rat:p,q -> rat:p',q' iff p/q <= p'/q' for p <= 9, q <= 3",
                "p<=9 q<=3", 2000 * million, 600, false, rational_order},
            {"clebsch-refutation", 15, "every orientation of clebsch has an alternating odd cycle (time-boxed)",
                "clebsch colours=16", 20000 * million, 14400, true, clebsch_refutation},
        };
    }
}

auto suite_catalog() -> const std::vector<SuiteItem> &
{
    static const std::vector<SuiteItem> catalog = build_catalog();
    return catalog;
}

auto input_hash(const SuiteItem & item) -> std::string
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const std::string & s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ull;
        }
        h ^= 0xff;
        h *= 0x100000001b3ull;
    };
    feed(cache_format);
    feed(item.id);
    feed(item.inputs);
    feed(std::to_string(item.budget));
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

auto run_item(const SuiteItem & item) -> ResultRecord
{
    ResultRecord record;
    record.id = item.id;
    record.criterion = item.criterion;
    record.input_hash = input_hash(item);
    NodeBudget budget(item.budget);
    auto start = std::chrono::steady_clock::now();
    try {
        auto outcome = item.run(budget);
        record.verdict = outcome.verdict;
        record.detail = std::move(outcome.detail);
        record.certificate = std::move(outcome.certificate);
    }
    catch (const BudgetExceeded & e) {
        record.verdict = Verdict::Timeout;
        record.detail = std::string("node budget exhausted: ") + e.what();
    }
    catch (const std::exception & e) {
        record.verdict = Verdict::Fail;
        record.detail = std::string("error: ") + e.what();
    }
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (record.verdict == Verdict::Pass && record.seconds > item.time_limit_seconds) {
        record.verdict = Verdict::Timeout;
        record.detail += "; exceeded " + std::to_string(item.time_limit_seconds) + " s";
    }
    return record;
}

auto record_to_json(const ResultRecord & r) -> nlohmann::json
{
    return {{"id", r.id}, {"criterion", r.criterion}, {"verdict", to_string(r.verdict)}, {"detail", r.detail},
        {"certificate", r.certificate}, {"seconds", r.seconds}, {"input_hash", r.input_hash}};
}

auto record_from_json(const nlohmann::json & j) -> ResultRecord
{
    ResultRecord r;
    r.id = j.at("id").get<std::string>();
    r.criterion = j.value("criterion", 0);
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.detail = j.value("detail", "");
    r.certificate = j.value("certificate", nlohmann::json::object());
    r.seconds = j.value("seconds", 0.0);
    r.input_hash = j.at("input_hash").get<std::string>();
    return r;
}

auto SuiteReport::exit_code() const -> int
{
    bool timeout = false;
    for (const auto & r : records) {
        if (r.verdict == Verdict::Fail)
            return 1;
        timeout |= r.verdict == Verdict::Timeout;
    }
    return timeout ? 3 : 0;
}

auto SuiteReport::to_json() const -> nlohmann::json
{
    nlohmann::json items = nlohmann::json::array();
    for (const auto & r : records) {
        auto j = record_to_json(r);
        j["cached"] = r.from_cache;
        items.push_back(j);
    }
    return {{"items", items}, {"exit_code", exit_code()}};
}

auto select_items(const std::string & filter) -> std::vector<const SuiteItem *>
{
    std::vector<const SuiteItem *> selected;
    for (const auto & item : suite_catalog())
        if (filter.empty() || fnmatch(filter.c_str(), item.id.c_str(), 0) == 0)
            selected.push_back(&item);
    return selected;
}

namespace {
    auto cache_path(const std::filesystem::path & dir, const SuiteItem & item) -> std::filesystem::path
    {
        return dir / (item.id + ".json");
    }

    auto load_cached(const std::filesystem::path & dir, const SuiteItem & item) -> std::optional<ResultRecord>
    {
        auto path = cache_path(dir, item);
        if (! std::filesystem::is_regular_file(path))
            return std::nullopt;
        try {
            auto record = record_from_json(read_json_file(path));
            // only conclusive verdicts are reused
            if (record.id != item.id || record.input_hash != input_hash(item) || record.verdict == Verdict::Timeout)
                return std::nullopt;
            record.from_cache = true;
            return record;
        }
        catch (const std::exception &) {
            return std::nullopt;
        }
    }
}

auto run_suite(const SuiteOptions & options) -> SuiteReport
{
    auto items = select_items(options.filter);
    SuiteReport report;
    report.records.resize(items.size());
    if (options.cache_dir)
        std::filesystem::create_directories(*options.cache_dir);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            const SuiteItem & item = *items[i];
            if (options.cache_dir) {
                if (auto cached = load_cached(*options.cache_dir, item)) {
                    report.records[i] = std::move(*cached);
                    continue;
                }
            }
            report.records[i] = run_item(item);
            if (options.cache_dir) {
                try {
                    write_text_file(cache_path(*options.cache_dir, item), record_to_json(report.records[i]).dump(2));
                }
                catch (const Error &) {
                    // a cache that cannot be written only costs time
                }
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(items.size())));
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t)
        threads.emplace_back(worker);
    worker();
    for (auto & t : threads)
        t.join();
    return report;
}

auto default_cache_dir() -> std::optional<std::filesystem::path>
{
    const char * dir = std::getenv("ALTCYCLES_CACHE_DIR");
    if (dir == nullptr || *dir == '\0')
        return std::nullopt;
    return std::filesystem::path(dir);
}

} // namespace altcycles
