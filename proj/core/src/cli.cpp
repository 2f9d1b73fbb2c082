#include "mg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "mg/closed_forms.hpp"
#include "mg/complex_pairing.hpp"
#include "mg/io.hpp"

namespace mg {

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

bool env_float_default() {
    const char* b = std::getenv("ADMISSIBLE_BACKEND");
    return b && std::string(b) == "float";
}

json report_header(bool float_mode) {
    json j;
    j["schema"] = "mgraph-report/1";
    j["version"] = kVersion;
    j["backend"] = float_mode ? "float" : "exact";
    return j;
}

int cmd_invariants(const std::string& file, bool float_mode, bool csv, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    Graph g = load_graph(file, float_mode);
    InvariantBundle b = invariant_bundle(g);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (csv) {
        if (!float_mode) throw ParseError("CSV output is float mode only");
        out << bundle_to_csv(b);
        return 0;
    }
    json j = report_header(float_mode);
    j["graph"] = file;
    j["invariants"] = bundle_to_json(b, float_mode);
    json comps = json::array();
    for (const auto& c : decompose_pointed_sum(g)) {
        json cj;
        cj["kind"] = c.graph.edge_count() == 1 && c.graph.is_bridge(0) ? "bridge" : "block";
        cj["genus"] = c.graph.genus();
        json es = json::array();
        for (int e = 0; e < c.graph.edge_count(); ++e) es.push_back(g.edge_id(c.edge_map[e]));
        cj["edges"] = es;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["timing_ms"] = ms;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_decompose(const std::string& file, std::ostream& out) {
    Graph g = load_graph(file, false);
    json j = report_header(false);
    j["graph"] = file;
    json comps = json::array();
    for (const auto& c : decompose_pointed_sum(g)) {
        json cj;
        cj["kind"] = c.graph.edge_count() == 1 && c.graph.is_bridge(0) ? "bridge" : "block";
        cj["genus"] = c.graph.genus();
        json vs = json::array();
        for (int v = 0; v < c.graph.vertex_count(); ++v)
            vs.push_back({{"id", g.vertex_id(c.vertex_map[v])}, {"q", c.graph.q(v)}});
        cj["vertices"] = vs;
        json es = json::array();
        for (int e = 0; e < c.graph.edge_count(); ++e) es.push_back(g.edge_id(c.edge_map[e]));
        cj["edges"] = es;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["elementary"] = is_elementary(g);
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_check(const std::string& file, const std::string& family, int count, std::uint64_t seed,
              const std::string& bound, const std::string& c_str, std::ostream& out) {
    std::optional<Rat> c;
    if (!c_str.empty()) {
        auto r = parse_rational(c_str);
        if (!r) throw ParseError("--c must be an integer or a/b");
        c = *r;
    }
    std::vector<Graph> graphs;
    std::vector<std::string> labels;
    if (!family.empty()) {
        FamilySpec fs;
        fs.name = family;
        fs.count = count;
        fs.seed = seed;
        graphs = generate_family(fs);
        for (size_t i = 0; i < graphs.size(); ++i)
            labels.push_back(family + "[" + std::to_string(i) + "]");
    } else if (!file.empty()) {
        graphs.push_back(load_graph(file, false));
        labels.push_back(file);
    } else {
        throw ParseError("check needs a graph file or --family");
    }

    json reports = json::array();
    int violations = 0;
    for (size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        std::vector<BoundReport> rs;
        try {
            if (bound == "phi") {
                rs.push_back(check_phi_bound(g, c));
            } else if (bound == "lambda") {
                rs.push_back(check_lambda_bound(g));
            } else if (bound == "epsilon") {
                auto two = check_epsilon_two_sided(g, c);
                rs.push_back(two.lower);
                rs.push_back(two.upper);
            } else if (bound == "trivial") {
                auto two = check_trivial_bounds(g);
                rs.push_back(two.lower);
                rs.push_back(two.upper);
            } else {
                throw ParseError("--bound must be phi|lambda|epsilon|trivial");
            }
        } catch (const DomainError& e) {
            json rj;
            rj["graph"] = labels[i];
            rj["error"] = e.what();
            reports.push_back(rj);
            continue;
        }
        for (auto& r : rs) {
            r.graph_id = labels[i];
            if (is_violation(r)) ++violations;
            reports.push_back(bound_report_to_json(r, false));
        }
    }
    json j = report_header(false);
    j["bound"] = bound;
    j["reports"] = reports;
    j["violations"] = violations;
    out << j.dump(2) << '\n';
    return violations > 0 ? 3 : 0;
}

bool same_shape(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (int e = 0; e < a.edge_count(); ++e)
        if (a.edge_u(e) != b.edge_u(e) || a.edge_v(e) != b.edge_v(e) ||
            a.length(e) != b.length(e))
            return false;
    return true;
}

CellFunction xy_cell_function(const Graph& g1, const Graph& g2) {
    double l1 = to_double(g1.length(0)), l2 = to_double(g2.length(0));
    CellFunction cf{g1, g2, {}, {}, {}, {}, {}, {}};
    cf.f =[l1, l2](int, int, double x, double y, int) { return x * y / (l1 * l2); };
    cf.fx = [l1, l2](int, int, double, double y, int) { return y / (l1 * l2); };
    cf.fy = [l1, l2](int, int, double x, double, int) { return x / (l1 * l2); };
    cf.fxx = [](int, int, double, double, int) { return 0.0; };
    return cf;
}

int cmd_triple(const std::string& file, int level, bool continuous, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    json spec;
    try {
        spec = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!spec.contains("factor1") || !spec.contains("factor2") || !spec.contains("divisors"))
        throw ParseError("complex file needs 'factor1', 'factor2', 'divisors'");
    Graph g1 = load_graph(spec.at("factor1").get<std::string>(), false);
    Graph g2 = load_graph(spec.at("factor2").get<std::string>(), false);
    const auto& dspecs = spec.at("divisors");
    if (!dspecs.is_array() || dspecs.size() != 3)
        throw ParseError("'divisors' must list exactly three entries");
    if (level < 1) throw ParseError("--level must be >= 1");

    auto cx = std::make_shared<ProductComplex>(g1, g2, level);
    std::shared_ptr<GreenTable> table;
    auto parse_coeff = [](const json& v) -> Rat {
        if (v.is_number_integer()) return Rat(v.get<long long>());
        if (v.is_string()) {
            auto r = parse_rational(v.get<std::string>());
            if (r) return *r;
        }
        throw ParseError("divisor coefficients must be integers or \"a/b\"");
    };

    std::vector<LatticeDivisor> divisors;
    std::vector<std::string> builtins;
    for (const auto& ds : dspecs) {
        if (ds.is_string()) {
            std::string name = ds.get<std::string>();
            builtins.push_back(name);
            if (name == "green") {
                if (!same_shape(g1, g2))
                    throw ParseError("'green' needs identical factor graphs");
                if (!table) table = std::make_shared<GreenTable>(g1);
                divisors.push_back(
                    sample_divisor(cx, [&](int e1, const Rat& a, int e2, const Rat& b) {
                        return table->green(edge_point(g1, e1, a * g1.length(e1)),
                                            edge_point(g1, e2, b * g1.length(e2)));
                    }));
            } else if (name == "xy") {
                if (g1.edge_count() != 1 || g2.edge_count() != 1)
                    throw ParseError("'xy' needs single-edge factors");
                divisors.push_back(sample_divisor(
                    cx, [](int, const Rat& a, int, const Rat& b) { return a * b; }));
            } else {
                throw ParseError("unknown builtin divisor '" + name + "'");
            }
        } else if (ds.is_object()) {
            builtins.push_back("");
            auto cx1 = std::make_shared<ProductComplex>(g1, g2, 1);
            LatticeDivisor d = zero_divisor(cx1);
            const auto& corner = ds.at("corner");
            const auto& center = ds.at("center");
            if (corner.size() != d.corner.size() || center.size() != d.center.size())
                throw ParseError("divisor coefficient arrays have the wrong size");
            for (size_t i = 0; i < d.corner.size(); ++i) d.corner[i] = parse_coeff(corner[i]);
            for (size_t i = 0; i < d.center.size(); ++i) d.center[i] = parse_coeff(center[i]);
            divisors.push_back(level == 1 ? std::move(d) : pullback_subdivide(d, level));
        } else {
            throw ParseError("divisor entries must be builtin names or {corner, center}");
        }
    }

    json j = report_header(false);
    j["level"] = level;
    j["discrete"] = to_string(discrete_triple(divisors[0], divisors[1], divisors[2]));
    if (continuous) {
        std::vector<CellFunction> fns;
        for (const auto& name : builtins) {
            if (name == "green")
                fns.push_back(green_product_function(g1));
            else if (name == "xy")
                fns.push_back(xy_cell_function(g1, g2));
            else
                throw ParseError("--continuous needs builtin function divisors");
        }
        j["continuous"] = continuous_triple(fns[0], fns[1], fns[2]);
    }
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_epsilon(const std::string& places_file, std::ostream& out) {
    auto places = load_places(places_file);
    json j = report_header(false);
    json locals = json::array();
    json disagreements = json::array();
    for (const auto& p : places) {
        json pj;
        pj["kind"] = to_string(p.kind);
        pj["g"] = p.g;
        if (p.kind == PlaceKind::Nonarchimedean) {
            pj["e"] = p.e;
            pj["tau"] = p.tau;
        } else if (!lemma_agrees(p.kind, p.g)) {
            disagreements.push_back({{"kind", to_string(p.kind)}, {"g", p.g}});
        }
        pj["epsilon"] = local_epsilon(p);
        locals.push_back(pj);
    }
    j["locals"] = locals;
    j["global"] = global_epsilon(places);
    j["lemma_disagreements"] = disagreements;
    out << j.dump(2) << '\n';
    return 0;
}

int cmd_lfactor(int genus, double s, std::ostream& out) {
    json j = report_header(false);
    j["genus"] = genus;
    j["s"] = s;
    double lg = log_archimedean_L_factor(genus, s);
    j["log_value"] = lg;
    j["value"] = std::exp(lg);
    out << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"local invariants of polarized metrized graphs"};
    app.require_subcommand(1);

    std::string file, family, bound, c_str, places_file;
    int count = 1, level = 1, genus = 2;
    std::uint64_t seed = 0;
    double s_value = 0;
    bool exact = false, use_float = false, csv = false, want_json = false, continuous = false;

    auto* inv = app.add_subcommand("invariants", "invariants of one graph");
    inv->add_option("file", file)->required();
    inv->add_flag("--exact", exact);
    inv->add_flag("--float", use_float);
    inv->add_flag("--json", want_json);
    inv->add_flag("--csv", csv);

    auto* dec = app.add_subcommand("decompose", "pointed-sum decomposition");
    dec->add_option("file", file)->required();

    auto* chk = app.add_subcommand("check", "conjecture bound checks");
    chk->add_option("file", file);
    chk->add_option("--family", family);
    chk->add_option("--count", count);
    chk->add_option("--seed", seed);
    chk->add_option("--bound", bound)->required();
    chk->add_option("--c", c_str);

    auto* tri = app.add_subcommand("triple", "triple intersection pairing");
    tri->add_option("file", file)->required();
    tri->add_option("--level", level);
    tri->add_flag("--continuous", continuous);

    auto* eps = app.add_subcommand("epsilon", "local and global root numbers");
    eps->add_option("--places", places_file)->required();

    auto* lf = app.add_subcommand("lfactor", "archimedean L-factor");
    lf->add_option("--genus", genus)->required();
    lf->add_option("--s", s_value)->required();

    std::vector<const char*> argv;
    argv.push_back("mgraph");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (app.got_subcommand(inv)) {
            if (exact && use_float) throw ParseError("--exact and --float are exclusive");
            bool float_mode = use_float || (!exact && env_float_default());
            (void)want_json;  // JSON is the default format
            return cmd_invariants(file, float_mode, csv, out);
        }
        if (app.got_subcommand(dec)) return cmd_decompose(file, out);
        if (app.got_subcommand(chk)) return cmd_check(file, family, count, seed, bound, c_str, out);
        if (app.got_subcommand(tri)) return cmd_triple(file, level, continuous, out);
        if (app.got_subcommand(eps)) return cmd_epsilon(places_file, out);
        if (app.got_subcommand(lf)) return cmd_lfactor(genus, s_value, out);
        err << "unknown command\n";
        return 1;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace mg
