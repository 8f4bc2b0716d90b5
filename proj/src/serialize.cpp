#include "altcycles/serialize.hpp"

#include <fstream>
#include <sstream>

#include "altcycles/families.hpp"

namespace altcycles {

namespace {
    [[noreturn]] void parse_error(const std::string & what) { throw Error(ErrorKind::ParseError, what); }

    template <typename F>
    auto guarded(F && f) -> decltype(f())
    {
        try {
            return f();
        }
        catch (const json::exception & e) {
            parse_error(e.what());
        }
    }

    auto labels_from(const json & arr) -> std::vector<VertexLabel>
    {
        if (! arr.is_array())
            parse_error("expected an array of labels");
        std::vector<VertexLabel> labels;
        for (const auto & x : arr)
            labels.push_back(label_from_json(x));
        return labels;
    }

    auto pairs_from(const json & arr) -> std::vector<LabelPair>
    {
        if (! arr.is_array())
            parse_error("expected an array of label pairs");
        std::vector<LabelPair> pairs;
        for (const auto & p : arr) {
            if (! p.is_array() || p.size() != 2)
                parse_error("expected a pair of labels");
            pairs.emplace_back(label_from_json(p[0]), label_from_json(p[1]));
        }
        return pairs;
    }

    auto arcs_to_json(const Orientation & o) -> json
    {
        json arcs = json::array();
        const Graph & g = o.base();
        for (auto [u, v] : o.arcs())
            arcs.push_back(json::array({label_to_json(g.label(u)), label_to_json(g.label(v))}));
        return arcs;
    }
}

auto label_to_json(const VertexLabel & label) -> json
{
    switch (label.kind()) {
    case VertexLabel::Kind::Int: return {{"int", label.as_int()}};
    case VertexLabel::Kind::Set: return {{"set", label.elements()}};
    case VertexLabel::Kind::Level:
        return {{"level", {{"base", label_to_json(label.base())}, {"level", label.level_index()}}}};
    case VertexLabel::Kind::Apex: return "apex";
    case VertexLabel::Kind::Pair: {
        auto [i, j] = label.as_pair();
        return {{"pair", {i, j}}};
    }
    }
    return nullptr;
}

auto label_from_json(const json & j) -> VertexLabel
{
    return guarded([&] {
        if (j.is_string()) {
            if (j.get<std::string>() == "apex")
                return VertexLabel::apex();
            parse_error("unknown label " + j.dump());
        }
        if (! j.is_object() || j.size() != 1)
            parse_error("unknown label " + j.dump());
        const auto & [key, value] = *j.items().begin();
        try {
            if (key == "int")
                return VertexLabel::integer(value.get<int>());
            if (key == "set")
                return VertexLabel::set(value.get<std::vector<int>>());
            if (key == "level")
                return VertexLabel::level(label_from_json(value.at("base")), value.at("level").get<int>());
            if (key == "pair")
                return VertexLabel::pair(value.at(0).get<int>(), value.at(1).get<int>());
        }
        catch (const Error & e) {
            if (e.kind() == ErrorKind::ParseError)
                throw;
            parse_error(e.what());
        }
        parse_error("unknown label kind " + key);
    });
}

auto label_key(const VertexLabel & label) -> std::string { return label_to_json(label).dump(); }

auto graph_to_json(const Graph & g) -> json
{
    json vertices = json::array();
    for (const auto & l : g.labels())
        vertices.push_back(label_to_json(l));
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(json::array({label_to_json(g.label(u)), label_to_json(g.label(v))}));
    return {{"vertices", vertices}, {"edges", edges}};
}

auto graph_from_json(const json & j) -> Graph
{
    return guarded([&] { return make_graph(labels_from(j.at("vertices")), pairs_from(j.at("edges"))); });
}

auto orientation_to_json(const Orientation & o) -> json
{
    json j = graph_to_json(o.base());
    j["arcs"] = arcs_to_json(o);
    return j;
}

auto orientation_from_json(const json & j) -> Orientation
{
    return guarded([&] {
        auto g = std::make_shared<const Graph>(graph_from_json(j));
        return orient(g, pairs_from(j.at("arcs")));
    });
}

auto coloring_to_json(const Graph & g, const Coloring & c) -> json
{
    json colors = json::object();
    for (int v = 0; v < g.order(); ++v)
        colors[label_key(g.label(v))] = c[v];
    return colors;
}

auto coloring_from_json(const Graph & g, const json & j) -> Coloring
{
    return guarded([&] {
        if (! j.is_object())
            parse_error("colouring must be an object");
        std::map<VertexLabel, int> colors;
        for (const auto & [key, value] : j.items())
            colors[label_from_json(json::parse(key))] = value.get<int>();
        return Coloring::from_labels(g, colors);
    });
}

auto certificate_to_json(const Graph & g, const Certificate & cert) -> json
{
    if (cert.found_cycle()) {
        json cycle = json::array();
        for (int v : cert.cycle().vertices)
            cycle.push_back(label_to_json(g.label(v)));
        return {{"verdict", "cycle"}, {"cycle", cycle}};
    }
    return {{"verdict", "coloring"}, {"colors", coloring_to_json(g, cert.coloring())}};
}

auto certificate_from_json(const Graph & g, const json & j) -> Certificate
{
    return guarded([&] {
        auto verdict = j.at("verdict").get<std::string>();
        if (verdict == "cycle") {
            std::vector<int> vs;
            for (const auto & l : labels_from(j.at("cycle")))
                vs.push_back(g.index_of(l));
            return Certificate{Cycle{vs}};
        }
        if (verdict == "coloring")
            return Certificate{coloring_from_json(g, j.at("colors"))};
        parse_error("unknown verdict " + verdict);
    });
}

auto report_to_json(const ConstructionReport & report) -> json
{
    json j;
    if (report.graph_spec.empty())
        j["graph"] = graph_to_json(report.graph());
    else
        j["graph"] = report.graph_spec;
    j["orientation"] = arcs_to_json(report.orientation);
    j["coloring"] = report.coloring ? coloring_to_json(report.graph(), *report.coloring) : json(nullptr);
    json checks = json::array();
    for (const auto & c : report.checks) {
        json check = {{"name", c.name}, {"passed", c.passed}};
        if (c.value)
            check["value"] = *c.value;
        checks.push_back(check);
    }
    j["checks"] = checks;
    return j;
}

auto report_from_json(const json & j) -> ConstructionReport
{
    return guarded([&] {
        const json & graph = j.at("graph");
        std::string spec;
        std::shared_ptr<const Graph> g;
        if (graph.is_string()) {
            spec = graph.get<std::string>();
            g = std::make_shared<const Graph>(build_graph(parse_family_spec(spec)));
        }
        else {
            g = std::make_shared<const Graph>(graph_from_json(graph));
        }
        ConstructionReport report{spec, orient(g, pairs_from(j.at("orientation"))), std::nullopt, {}};
        if (j.contains("coloring") && ! j.at("coloring").is_null())
            report.coloring = coloring_from_json(*g, j.at("coloring"));
        for (const auto & c : j.value("checks", json::array())) {
            Check check{c.at("name").get<std::string>(), c.at("passed").get<bool>(), std::nullopt};
            if (c.contains("value"))
                check.value = c.at("value").get<int>();
            report.checks.push_back(check);
        }
        return report;
    });
}

auto witness_to_json(const Graph & src, const ShiftWitness & witness) -> json
{
    Graph target = shift_graph(witness.m);
    json map = hom_to_json(src, target, witness.map).at("map");
    return {{"m", witness.m}, {"map", map}};
}

auto hom_to_json(const Graph & src, const Graph & dst, const HomomorphismMap & map) -> json
{
    json m = json::object();
    for (int v = 0; v < src.order(); ++v)
        m[label_key(src.label(v))] = label_to_json(dst.label(map[v]));
    return {{"map", m}};
}

auto refutation_to_json(const SearchStats & stats) -> json
{
    return {{"nodes", stats.nodes}, {"complete", stats.complete}};
}

auto read_text_file(const std::filesystem::path & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::IoError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto read_json_file(const std::filesystem::path & path) -> json
{
    auto text = read_text_file(path);
    return guarded([&] { return json::parse(text); });
}

void write_text_file(const std::filesystem::path & path, const std::string & text)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (! out)
            throw Error(ErrorKind::IoError, "cannot write " + path.string());
        out << text;
        if (! out)
            throw Error(ErrorKind::IoError, "failed writing " + path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error(ErrorKind::IoError, "cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

auto load_graph(const std::string & input) -> Graph
{
    if (! std::filesystem::is_regular_file(input))
        return build_graph(parse_family_spec(input));
    auto j = read_json_file(input);
    if (j.contains("orientation") && j.contains("graph"))
        return report_from_json(j).graph();
    return graph_from_json(j);
}

auto load_orientation(const std::string & input) -> Orientation
{
    auto j = read_json_file(input);
    if (j.contains("orientation") && j.contains("graph"))
        return report_from_json(j).orientation;
    return orientation_from_json(j);
}

} // namespace altcycles
