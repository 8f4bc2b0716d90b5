#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "altcycles/coloring_search.hpp"
#include "altcycles/dot.hpp"
#include "altcycles/evaluate.hpp"
#include "altcycles/families.hpp"
#include "altcycles/homsearch.hpp"
#include "altcycles/oddcycles.hpp"
#include "altcycles/orient.hpp"
#include "altcycles/serialize.hpp"
#include "altcycles/suite.hpp"

using namespace altcycles;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_timeout = 3;

struct Options {
    std::uint64_t budget = 50'000'000;
    std::string output;
};

void emit(const Options & opts, const std::string & text)
{
    if (opts.output.empty() || opts.output == "-")
        std::cout << text;
    else
        write_text_file(opts.output, text);
}

void emit(const Options & opts, const json & j) { emit(opts, j.dump(2) + "\n"); }

auto report_exit(const ConstructionReport & report) -> int { return report.all_passed() ? exit_pass : exit_fail; }

auto load_coloring(const Graph & g, const std::string & path) -> Coloring
{
    auto j = read_json_file(path);
    if (j.contains("coloring"))
        return coloring_from_json(g, j.at("coloring"));
    if (j.contains("colors"))
        return coloring_from_json(g, j.at("colors"));
    return coloring_from_json(g, j);
}

/// Graph and optional colouring from a spec, graph, orientation or report input.
struct Loaded {
    std::optional<Orientation> orientation;
    Graph graph;
    std::optional<Coloring> coloring;
};

auto load_any(const std::string & input) -> Loaded
{
    Loaded loaded;
    if (! std::filesystem::is_regular_file(input)) {
        loaded.graph = build_graph(parse_family_spec(input));
        return loaded;
    }
    auto j = read_json_file(input);
    if (j.contains("orientation") && j.contains("graph")) {
        auto report = report_from_json(j);
        loaded.graph = report.graph();
        loaded.orientation = report.orientation;
        loaded.coloring = report.coloring;
    }
    else if (j.contains("arcs")) {
        loaded.orientation = orientation_from_json(j);
        loaded.graph = loaded.orientation->base();
    }
    else {
        loaded.graph = graph_from_json(j);
    }
    return loaded;
}

auto digraph_to_json(const Digraph & d) -> json
{
    json vertices = json::array(), arcs = json::array();
    for (const auto & l : d.labels())
        vertices.push_back(label_to_json(l));
    for (auto [u, v] : d.arcs())
        arcs.push_back(json::array({label_to_json(d.label(u)), label_to_json(d.label(v))}));
    return {{"vertices", vertices}, {"arcs", arcs}};
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Alternating odd cycles, directed local colourings and shift-graph homomorphisms"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--budget", opts.budget, "Node budget for searches")->capture_default_str();

    // gen
    auto * gen = app.add_subcommand("gen", "Generate a graph from a family spec");
    std::string gen_spec;
    gen->add_option("spec", gen_spec, "kneser:n,k | schrijver:n,k | myc:r1-r2 | rat:p,q | shift:m | dshift:m | "
                                      "clebsch | grotzsch | wheel:n | cycle:n | complete:n | moebius:n")
        ->required();
    gen->add_option("-o,--output", opts.output, "Output file (default stdout)");

    // orient
    auto * orient_cmd = app.add_subcommand("orient", "Run an orientation construction");
    orient_cmd->require_subcommand(1);
    orient_cmd->add_option("-o,--output", opts.output, "Report file (default stdout)");
    std::optional<std::uint64_t> seed;
    std::string graph_input, coloring_input;
    int param_m = 1, param_k = 2, param_j = 1, colors = 0;

    auto * three = orient_cmd->add_subcommand("three-color", "Cyclic orientation from a 3-colouring");
    three->add_option("graph", graph_input, "Family spec or graph file")->required();
    three->add_option("--coloring", coloring_input, "Colouring file; searched for when omitted");

    auto * source = orient_cmd->add_subcommand("source-kneser", "Source element orientation of kneser(m(2k+1),mk)");
    source->add_option("--m", param_m)->capture_default_str();
    source->add_option("--k", param_k)->capture_default_str();
    source->add_option("--j", param_j, "Element whose sets become sources")->capture_default_str();
    source->add_option("--seed", seed, "Randomise the free edges");

    auto * partition = orient_cmd->add_subcommand("partition", "Bipartite-plus-matching orientation");
    partition->add_option("graph", graph_input)->required();
    partition->add_option("--seed", seed, "Randomise the matching edges");

    auto * s4 = orient_cmd->add_subcommand("schrijver4", "Value-2 four-colouring of schrijver(2k+2,k)");
    s4->add_option("--k", param_k)->capture_default_str();

    auto * joint = orient_cmd->add_subcommand("joint", "Search an orientation with a value-2 colouring");
    joint->add_option("graph", graph_input)->required();
    joint->add_option("--colors", colors, "Colour budget (default: number of vertices)");
    for (auto * sub : {three, source, partition, s4, joint})
        sub->fallthrough();

    // check
    auto * check = app.add_subcommand("check", "Check an orientation or colouring");
    check->require_subcommand(1);
    std::string check_input;
    int wide_s = 2;
    auto * check_alt = check->add_subcommand("alt", "Alternating odd cycle or witness colouring");
    check_alt->add_option("input", check_input, "Orientation or report file")->required();
    auto * check_shortest = check->add_subcommand("shortest", "Are all shortest odd cycles alternating");
    check_shortest->add_option("input", check_input, "Orientation or report file")->required();
    auto * check_wide = check->add_subcommand("wide", "Is the colouring s-wide");
    check_wide->add_option("input", check_input, "Report file, or graph input with --coloring")->required();
    check_wide->add_option("--coloring", coloring_input);
    check_wide->add_option("-s", wide_s)->capture_default_str();

    // hom
    auto * hom = app.add_subcommand("hom", "Search for a homomorphism");
    std::string hom_from, hom_to;
    bool refute = false;
    hom->add_option("--from", hom_from, "Source spec or graph file")->required();
    hom->add_option("--to", hom_to, "Target spec or graph file")->required();
    hom->add_flag("--refute", refute, "Expect no homomorphism (exit 0 on complete refutation)");
    hom->add_option("--seed", seed, "Shuffle the value order");
    hom->add_option("-o,--output", opts.output);

    // suite
    auto * suite = app.add_subcommand("suite", "Run the verification suite");
    SuiteOptions suite_opts;
    std::string cache_dir, json_out;
    bool no_cache = false;
    suite->add_option("--filter", suite_opts.filter, "Glob over item ids");
    suite->add_option("--jobs", suite_opts.jobs)->capture_default_str();
    suite->add_option("--cache", cache_dir, "Cache directory (default $ALTCYCLES_CACHE_DIR)");
    suite->add_flag("--no-cache", no_cache, "Ignore the cache");
    suite->add_option("--json", json_out, "Write all records to this file");
    bool list_only = false;
    suite->add_flag("--list", list_only, "List the items and exit");

    // export
    auto * export_cmd = app.add_subcommand("export", "Export to other formats");
    export_cmd->require_subcommand(1);
    auto * dot = export_cmd->add_subcommand("dot", "Graphviz DOT");
    std::string dot_input;
    dot->add_option("input", dot_input, "Spec, graph, orientation or report")->required();
    dot->add_option("-o,--output", opts.output);

    // explore
    auto * explore = app.add_subcommand("explore", "Open-ended searches without asserted outcomes");
    explore->require_subcommand(1);
    auto * kneser_shift = explore->add_subcommand("kneser-shift", "Smallest m with kneser(n,k) -> S_m");
    int explore_n = 8, explore_k = 3, m_max = 8;
    kneser_shift->add_option("--n", explore_n)->capture_default_str();
    kneser_shift->add_option("--k", explore_k)->capture_default_str();
    kneser_shift->add_option("--m-max", m_max)->capture_default_str();
    auto * shortest_alt = explore->add_subcommand("shortest-alternating", "Orientation with all shortest odd "
                                                                          "cycles alternating");
    shortest_alt->add_option("graph", graph_input)->required();
    shortest_alt->add_option("-o,--output", opts.output);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        NodeBudget budget(opts.budget);
        SearchConfig cfg;
        cfg.node_budget = opts.budget;
        cfg.seed = seed;

        if (*gen) {
            auto spec = parse_family_spec(gen_spec);
            emit(opts, spec.kind == FamilyKind::DirectedShift ? digraph_to_json(build_digraph(spec))
                                                             : graph_to_json(build_graph(spec)));
            return exit_pass;
        }

        if (*orient_cmd) {
            std::optional<ConstructionReport> report;
            TieRule tie{seed};
            if (*three) {
                auto loaded = load_any(graph_input);
                auto g = std::make_shared<const Graph>(loaded.graph);
                std::optional<Coloring> c = coloring_input.empty() ? find_k_coloring(*g, 3, budget)
                                                                   : std::optional(load_coloring(*g, coloring_input));
                if (! c) {
                    std::cerr << "graph is not 3-colourable\n";
                    return exit_fail;
                }
                report = three_color_orientation(g, *c);
                if (! std::filesystem::is_regular_file(graph_input))
                    report->graph_spec = graph_input;
            }
            else if (*source) {
                report = source_orientation_kneser(param_m, param_k, param_j, tie, &budget);
            }
            else if (*partition) {
                auto g = std::make_shared<const Graph>(load_any(graph_input).graph);
                auto p = find_bipartite_matching_partition(*g, budget);
                if (! p) {
                    std::cerr << "no bipartite-plus-matching partition exists\n";
                    return exit_fail;
                }
                report = partition_orientation(g, *p, tie, &budget);
                if (! std::filesystem::is_regular_file(graph_input))
                    report->graph_spec = graph_input;
            }
            else if (*s4) {
                report = schrijver4_construction(param_k, budget);
            }
            else if (*joint) {
                auto g = std::make_shared<const Graph>(load_any(graph_input).graph);
                auto result = joint_orientation_coloring_search(g, colors > 0 ? colors : g->order(), cfg);
                if (! result.report) {
                    emit(opts, json{{"refutation", refutation_to_json(result.stats)}});
                    return exit_fail;
                }
                report = std::move(result.report);
                if (! std::filesystem::is_regular_file(graph_input))
                    report->graph_spec = graph_input;
            }
            emit(opts, report_to_json(*report));
            return report_exit(*report);
        }

        if (*check) {
            if (*check_alt) {
                auto o = load_orientation(check_input);
                auto cert = alternating_verdict(o, budget);
                std::cout << certificate_to_json(o.base(), cert).dump(2) << "\n";
                return verify_certificate(o, cert) ? exit_pass : exit_fail;
            }
            if (*check_shortest) {
                auto o = load_orientation(check_input);
                auto result = all_shortest_odd_cycles_alternating(o, budget);
                json out = {{"all_alternating", result.all_alternating}, {"cycles_checked", result.cycles_checked}};
                if (result.counterexample) {
                    json cycle = json::array();
                    for (int v : result.counterexample->vertices)
                        cycle.push_back(label_to_json(o.base().label(v)));
                    out["counterexample"] = cycle;
                }
                std::cout << out.dump(2) << "\n";
                return result.all_alternating ? exit_pass : exit_fail;
            }
            if (*check_wide) {
                auto loaded = load_any(check_input);
                Coloring c = coloring_input.empty()
                    ? (loaded.coloring ? *loaded.coloring
                                       : throw Error(ErrorKind::PartialColoring, "input carries no colouring"))
                    : load_coloring(loaded.graph, coloring_input);
                bool wide = is_s_wide(loaded.graph, c, wide_s);
                std::cout << json{{"s", wide_s}, {"wide", wide}}.dump(2) << "\n";
                return wide ? exit_pass : exit_fail;
            }
        }

        if (*hom) {
            Graph src = load_graph(hom_from);
            Graph dst = load_graph(hom_to);
            auto result = search_homomorphism(src, dst, cfg);
            if (result.map) {
                json out = hom_to_json(src, dst, *result.map);
                out["stats"] = refutation_to_json(result.stats);
                emit(opts, out);
            }
            else {
                emit(opts, json{{"refutation", refutation_to_json(result.stats)}});
            }
            return result.map.has_value() != refute ? exit_pass : exit_fail;
        }

        if (*suite) {
            if (list_only) {
                for (const auto * item : select_items(suite_opts.filter))
                    std::cout << item->id << "  [" << item->criterion << "] " << item->description << "\n";
                return exit_pass;
            }
            if (! cache_dir.empty())
                suite_opts.cache_dir = cache_dir;
            else
                suite_opts.cache_dir = default_cache_dir();
            if (no_cache)
                suite_opts.cache_dir.reset();
            if (select_items(suite_opts.filter).empty()) {
                std::cerr << "no suite item matches '" << suite_opts.filter << "'\n";
                return exit_usage;
            }
            auto report = run_suite(suite_opts);
            for (const auto & r : report.records) {
                std::cout << to_string(r.verdict) << "  " << r.id << "  " << r.seconds << " s"
                          << (r.from_cache ? " (cached)" : "");
                if (! r.detail.empty())
                    std::cout << "  " << r.detail;
                std::cout << "\n";
            }
            if (! json_out.empty())
                write_text_file(json_out, report.to_json().dump(2) + "\n");
            return report.exit_code();
        }

        if (*export_cmd) {
            auto loaded = load_any(dot_input);
            const Coloring * c = loaded.coloring ? &*loaded.coloring : nullptr;
            emit(opts, loaded.orientation ? to_dot(*loaded.orientation, c) : to_dot(loaded.graph, c));
            return exit_pass;
        }

        if (*explore) {
            if (*kneser_shift) {
                Graph g = kneser(explore_n, explore_k);
                for (int m = 2; m <= m_max; ++m) {
                    std::cout << "kneser(" << explore_n << "," << explore_k << ") -> S_" << m << ": " << std::flush;
                    try {
                        auto result = search_homomorphism(g, shift_graph(m), cfg);
                        std::cout << (result.map ? "found" : "refuted") << " after " << result.stats.nodes
                                  << " nodes\n";
                        if (result.map)
                            break;
                    }
                    catch (const BudgetExceeded &) {
                        std::cout << "undecided within " << opts.budget << " nodes\n";
                    }
                }
                return exit_pass;
            }
            if (*shortest_alt) {
                auto g = std::make_shared<const Graph>(load_any(graph_input).graph);
                auto o = search_shortest_alternating_orientation(g, budget);
                if (! o) {
                    std::cout << "no orientation makes every shortest odd cycle alternating\n";
                    return exit_pass;
                }
                emit(opts, orientation_to_json(*o));
                return exit_pass;
            }
        }
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_timeout;
    }
    catch (const Error & e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::IoError:
        case ErrorKind::BadParameters:
        case ErrorKind::UnknownEndpoint:
        case ErrorKind::DuplicateVertex:
        case ErrorKind::SelfLoop:
        case ErrorKind::PartialColoring:
        case ErrorKind::IncompleteRule:
        case ErrorKind::ForeignEdge: return exit_usage;
        default: return exit_fail;
        }
    }
    return exit_usage;
}
