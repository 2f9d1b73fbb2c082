#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mg/admissible.hpp"
#include "mg/conjectures.hpp"
#include "mg/graph.hpp"
#include "mg/root_numbers.hpp"

namespace mg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(std::vector<Violation> v);
    std::vector<Violation> violations;
};

// Graph file: {"vertices":[{"id","q"}], "edges":[{"id","ends":[u,v],"length"}]}
// Lengths: integers and "a/b" strings always; other numbers in float mode only.
GraphSpec graph_spec_from_json(const nlohmann::json& j, bool float_mode);
nlohmann::json graph_spec_to_json(const GraphSpec& s);

Graph load_graph(const std::string& path, bool float_mode);
Graph parse_graph(std::istream& in, bool float_mode);

std::vector<LocalPlaceData> load_places(const std::string& path);
std::vector<LocalPlaceData> parse_places(std::istream& in);

std::string scalar_string(const Rat& r, bool float_mode);
nlohmann::json bundle_to_json(const InvariantBundle& b, bool float_mode);
std::string bundle_to_csv(const InvariantBundle& b);  // float mode only
nlohmann::json bound_report_to_json(const BoundReport& r, bool float_mode);

}  // namespace mg
