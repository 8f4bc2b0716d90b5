#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "altcycles/graph.hpp"
#include "altcycles/homsearch.hpp"
#include "altcycles/oddcycles.hpp"
#include "altcycles/report.hpp"

namespace altcycles {

using nlohmann::json;

// Label forms: {"int":n} | {"set":[..]} | {"level":{"base":..,"level":i}} |
// "apex" | {"pair":[i,j]}. Colour and map objects are keyed by the compact
// dump of the label's JSON form. Parse failures throw ParseError.

auto label_to_json(const VertexLabel & label) -> json;
auto label_from_json(const json & j) -> VertexLabel;
auto label_key(const VertexLabel & label) -> std::string;

/// {"vertices":[...],"edges":[[a,b],...]}
auto graph_to_json(const Graph & g) -> json;
auto graph_from_json(const json & j) -> Graph;

/// Graph object plus "arcs":[[tail,head],...].
auto orientation_to_json(const Orientation & o) -> json;
auto orientation_from_json(const json & j) -> Orientation;

auto coloring_to_json(const Graph & g, const Coloring & c) -> json;
auto coloring_from_json(const Graph & g, const json & j) -> Coloring;

/// {"verdict":"cycle","cycle":[...]} or {"verdict":"coloring","colors":{...}}
auto certificate_to_json(const Graph & g, const Certificate & cert) -> json;
auto certificate_from_json(const Graph & g, const json & j) -> Certificate;

/// {"graph":spec|graph,"orientation":[[a,b],...],"coloring":{...}|null,"checks":[...]}
auto report_to_json(const ConstructionReport & report) -> json;
auto report_from_json(const json & j) -> ConstructionReport;

/// {"m":m,"map":{label:pair}}
auto witness_to_json(const Graph & src, const ShiftWitness & witness) -> json;
/// {"map":{label:label}} for an arbitrary target.
auto hom_to_json(const Graph & src, const Graph & dst, const HomomorphismMap & map) -> json;
auto refutation_to_json(const SearchStats & stats) -> json;

auto read_json_file(const std::filesystem::path & path) -> json;
auto read_text_file(const std::filesystem::path & path) -> std::string;
/// Writes through a temporary file and a rename. Errors: IoError.
void write_text_file(const std::filesystem::path & path, const std::string & text);

/// A family spec, or a JSON file holding a graph, an orientation or a report.
auto load_graph(const std::string & input) -> Graph;
/// A JSON file holding an orientation or a report.
auto load_orientation(const std::string & input) -> Orientation;

} // namespace altcycles
