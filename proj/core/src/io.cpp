#include "mg/io.hpp"

#include <fstream>
#include <sstream>

namespace mg {

using nlohmann::json;

ValidationError::ValidationError(std::vector<Violation> v)
    : std::runtime_error([&v] {
          std::string m = "validation failed:";
          for (const auto& x : v) m += " " + describe(x) + ";";
          return m;
      }()),
      violations(std::move(v)) {}

namespace {

Rat parse_length(const json& j, const std::string& edge_id, bool float_mode) {
    if (j.is_number_integer()) {
        long long n = j.get<long long>();
        return Rat(n);
    }
    if (j.is_string()) {
        auto r = parse_rational(j.get<std::string>());
        if (!r) throw ParseError("edge " + edge_id + ": bad rational length '" +
                                 j.get<std::string>() + "'");
        return *r;
    }
    if (j.is_number_float()) {
        if (!float_mode)
            throw ParseError("edge " + edge_id +
                             ": non-integer numeric length needs float mode; use \"a/b\"");
        return rat_from_double(j.get<double>());
    }
    throw ParseError("edge " + edge_id + ": length must be a number or \"a/b\"");
}

}  // namespace

GraphSpec graph_spec_from_json(const json& j, bool float_mode) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ParseError("graph file needs 'vertices' and 'edges' arrays");
    GraphSpec s;
    for (const auto& v : j.at("vertices")) {
        if (!v.contains("id")) throw ParseError("vertex without 'id'");
        VertexSpec vs;
        vs.id = v.at("id").get<std::string>();
        vs.q = v.value("q", 0LL);
        s.vertices.push_back(std::move(vs));
    }
    for (const auto& e : j.at("edges")) {
        if (!e.contains("id") || !e.contains("ends") || !e.contains("length"))
            throw ParseError("edge needs 'id', 'ends', 'length'");
        EdgeSpec es;
        es.id = e.at("id").get<std::string>();
        const auto& ends = e.at("ends");
        if (!ends.is_array() || ends.size() != 2)
            throw ParseError("edge " + es.id + ": 'ends' must be [u, v]");
        es.u = ends[0].get<std::string>();
        es.v = ends[1].get<std::string>();
        es.length = parse_length(e.at("length"), es.id, float_mode);
        s.edges.push_back(std::move(es));
    }
    return s;
}

json graph_spec_to_json(const GraphSpec& s) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : s.vertices) j["vertices"].push_back({{"id", v.id}, {"q", v.q}});
    j["edges"] = json::array();
    for (const auto& e : s.edges)
        j["edges"].push_back(
            {{"id", e.id}, {"ends", {e.u, e.v}}, {"length", to_string(e.length)}});
    return j;
}

Graph parse_graph(std::istream& in, bool float_mode) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    GraphSpec s = graph_spec_from_json(j, float_mode);
    auto r = Graph::validate(s);
    if (auto* v = std::get_if<std::vector<Violation>>(&r)) throw ValidationError(*v);
    return std::get<Graph>(std::move(r));
}

Graph load_graph(const std::string& path, bool float_mode) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in, float_mode);
}

std::vector<LocalPlaceData> parse_places(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("places") || !j.at("places").is_array())
        throw ParseError("places file needs a 'places' array");
    std::vector<LocalPlaceData> out;
    for (const auto& p : j.at("places")) {
        LocalPlaceData d;
        std::string kind = p.value("kind", "");
        if (kind == "real")
            d.kind = PlaceKind::Real;
        else if (kind == "complex")
            d.kind = PlaceKind::Complex;
        else if (kind == "nonarch")
            d.kind = PlaceKind::Nonarchimedean;
        else
            throw ParseError("place kind must be real|complex|nonarch");
        d.g = p.value("g", 1);
        if (d.g < 1) throw ParseError("place genus must be >= 1");
        d.e = p.value("e", 0LL);
        d.tau = p.value("tau", 1);
        if (d.tau != 1 && d.tau != -1) throw ParseError("tau must be 1 or -1");
        if (d.e < 0 || d.e > d.g) throw ParseError("toric rank must satisfy 0 <= e <= g");
        out.push_back(d);
    }
    if (out.empty()) throw ParseError("places file is empty");
    return out;
}

std::vector<LocalPlaceData> load_places(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_places(in);
}

std::string scalar_string(const Rat& r, bool float_mode) {
    if (!float_mode) return to_string(r);
    std::ostringstream os;
    os.precision(17);
    os << to_double(r);
    return os.str();
}

namespace {

json scalar_json(const Rat& r, bool float_mode) {
    if (float_mode) return to_double(r);
    return to_string(r);
}

}  // namespace

json bundle_to_json(const InvariantBundle& b, bool float_mode) {
    json j;
    j["genus"] = b.genus;
    j["ell"] = scalar_json(b.ell, float_mode);
    j["tau"] = scalar_json(b.tau, float_mode);
    j["epsilon"] = scalar_json(b.epsilon, float_mode);
    j["phi"] = scalar_json(b.phi, float_mode);
    j["lambda"] = scalar_json(b.lambda, float_mode);
    json tl = json::object();
    for (const auto& [type, len] : b.type_lengths)
        tl[std::to_string(type)] = scalar_json(len, float_mode);
    j["type_lengths"] = tl;
    return j;
}

std::string bundle_to_csv(const InvariantBundle& b) {
    std::ostringstream os;
    os.precision(17);
    os << "genus,ell,tau,epsilon,phi,lambda\n"
       << b.genus << ',' << to_double(b.ell) << ',' << to_double(b.tau) << ','
       << to_double(b.epsilon) << ',' << to_double(b.phi) << ',' << to_double(b.lambda) << '\n';
    return os.str();
}

json bound_report_to_json(const BoundReport& r, bool float_mode) {
    json j;
    j["graph"] = r.graph_id;
    j["bound"] = r.bound;
    j["left"] = scalar_json(r.left, float_mode);
    j["right"] = scalar_json(r.right, float_mode);
    j["slack"] = scalar_json(r.slack, float_mode);
    j["verdict"] = to_string(r.verdict);
    j["c"] = scalar_json(r.c_used, float_mode);
    j["c_is_default"] = r.c_is_default;
    j["flagged"] = r.flagged;
    return j;
}

}  // namespace mg
