#include "mg/conjectures.hpp"

#include "mg/closed_forms.hpp"

#include <random>

namespace mg {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Equality: return "equality";
        case Verdict::Fails: return "fails";
    }
    return "?";
}

bool is_violation(const BoundReport& r) {
    return r.verdict == Verdict::Fails && !r.flagged;
}

namespace {

Verdict verdict_of(const Rat& slack) {
    if (slack > 0) return Verdict::Holds;
    if (slack == 0) return Verdict::Equality;
    return Verdict::Fails;
}

Rat default_c(int g) { return Rat(g - 1, 6LL * g); }

std::string graph_label(const Graph& g) {
    return "g" + std::to_string(g.genus()) + ":v" + std::to_string(g.vertex_count()) + ":e" +
           std::to_string(g.edge_count());
}

}  // namespace

BoundReport check_phi_bound(const Graph& g, const InvariantBundle& b, std::optional<Rat> c) {
    if (b.genus < 2) throw DomainError("GenusTooSmall");
    BoundReport r;
    r.graph_id = graph_label(g);
    r.bound = "phi";
    r.c_is_default = !c.has_value();
    r.c_used = c.value_or(default_c(b.genus));
    Rat rhs = 0;
    for (const auto& [type, len] : b.type_lengths) {
        if (type == 0)
            rhs += r.c_used * len;
        else
            rhs += Rat(2 * type * (b.genus - type), b.genus) * len;
    }
    r.left = b.phi;
    r.right = rhs;
    r.slack = r.left - r.right;
    r.verdict = verdict_of(r.slack);
    if (r.verdict == Verdict::Fails && r.c_is_default && !is_elementary(g)) r.flagged = true;
    return r;
}

BoundReport check_phi_bound(const Graph& g, std::optional<Rat> c) {
    return check_phi_bound(g, invariant_bundle(g), std::move(c));
}

BoundReport check_lambda_bound(const Graph& g, const InvariantBundle& b) {
    if (b.genus < 2) throw DomainError("GenusTooSmall");
    BoundReport r;
    r.graph_id = graph_label(g);
    r.bound = "lambda";
    long long gg = b.genus;
    Rat rhs = 0;
    for (const auto& [type, len] : b.type_lengths) {
        if (type == 0)
            rhs += Rat(gg, 8 * gg + 4) * len;
        else
            rhs += Rat(type * (gg - type), 2 * gg + 1) * len;
    }
    r.left = b.lambda;
    r.right = rhs;
    r.slack = r.left - r.right;
    r.verdict = verdict_of(r.slack);
    return r;
}

BoundReport check_lambda_bound(const Graph& g) {
    return check_lambda_bound(g, invariant_bundle(g));
}

TwoSidedReport check_epsilon_two_sided(const Graph& g, std::optional<Rat> c) {
    if (!is_two_edge_connected(g)) throw DomainError("NotTwoEdgeConnected");
    auto b = invariant_bundle(g);
    if (b.genus < 2) throw DomainError("GenusTooSmall");
    long long gg = b.genus;
    Rat cval = c.value_or(default_c(b.genus));
    TwoSidedReport t;
    t.lower.graph_id = t.upper.graph_id = graph_label(g);
    t.lower.bound = "epsilon-lower";
    t.upper.bound = "epsilon-upper";
    t.lower.c_used = t.upper.c_used = cval;
    t.lower.c_is_default = t.upper.c_is_default = !c.has_value();
    t.lower.left = b.epsilon;
    t.lower.right = Rat(gg - 1, gg + 1) * (b.ell - 4 * gg * b.tau);
    t.lower.slack = t.lower.left - t.lower.right;
    t.lower.verdict = verdict_of(t.lower.slack);
    t.upper.left = Rat(12 * gg) * b.tau - (1 + cval) * b.ell;
    t.upper.right = b.epsilon;
    t.upper.slack = t.upper.left - t.upper.right;
    t.upper.verdict = verdict_of(t.upper.slack);
    // mirror the phi-bound policy: the constant is proved only for
    // elementary graphs, so a default-c upper failure elsewhere is a flag
    if (t.upper.verdict == Verdict::Fails && t.upper.c_is_default && !is_elementary(g))
        t.upper.flagged = true;
    return t;
}

TwoSidedReport check_trivial_bounds(const Graph& g) {
    auto b = invariant_bundle(g);
    if (b.genus < 2) throw DomainError("GenusTooSmall");
    long long gg = b.genus;
    TwoSidedReport t;
    t.lower.graph_id = t.upper.graph_id = graph_label(g);
    t.lower.bound = "trivial-lower";
    t.upper.bound = "trivial-upper";
    t.lower.left = b.phi;
    t.lower.right = Rat(-(2 * gg - 1), 4) * b.ell;
    t.lower.slack = t.lower.left - t.lower.right;
    t.lower.verdict = verdict_of(t.lower.slack);
    t.upper.left = Rat(3 * gg, 2) * b.ell;
    t.upper.right = b.phi;
    t.upper.slack = t.upper.left - t.upper.right;
    t.upper.verdict = verdict_of(t.upper.slack);
    return t;
}

namespace {

Rat random_length(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 8), den(1, 4);
    return Rat(num(rng), den(rng));
}

GraphSpec banana_spec(int m, std::mt19937_64* rng) {
    GraphSpec s;
    s.vertices = {{"u", 0}, {"v", 0}};
    for (int i = 0; i < m; ++i)
        s.edges.push_back({"e" + std::to_string(i), "u", "v", rng ? random_length(*rng) : Rat(1)});
    return s;
}

GraphSpec chain_spec(int k, long long total_genus, std::mt19937_64* rng) {
    // k circles joined in a row by bridges; any genus beyond one per circle
    // goes onto the first junction as vertex weight
    if (total_genus < k) throw DomainError("InvalidSpec: chain genus below circle count");
    GraphSpec s;
    for (int i = 0; i < k; ++i) {
        s.vertices.push_back({"c" + std::to_string(i), i == 0 ? total_genus - k : 0});
        s.edges.push_back({"loop" + std::to_string(i), "c" + std::to_string(i),
                           "c" + std::to_string(i), rng ? random_length(*rng) : Rat(1)});
        if (i > 0)
            s.edges.push_back({"br" + std::to_string(i), "c" + std::to_string(i - 1),
                               "c" + std::to_string(i), rng ? random_length(*rng) : Rat(1)});
    }
    return s;
}

GraphSpec wheel_spec(int k, std::mt19937_64* rng) {
    GraphSpec s;
    s.vertices.push_back({"hub", 0});
    for (int i = 0; i < k; ++i) s.vertices.push_back({"r" + std::to_string(i), 0});
    for (int i = 0; i < k; ++i) {
        s.edges.push_back({"spoke" + std::to_string(i), "hub", "r" + std::to_string(i),
                           rng ? random_length(*rng) : Rat(1)});
        s.edges.push_back({"rim" + std::to_string(i), "r" + std::to_string(i),
                           "r" + std::to_string((i + 1) % k), rng ? random_length(*rng) : Rat(1)});
    }
    return s;
}

GraphSpec complete_spec(int k, std::mt19937_64* rng) {
    GraphSpec s;
    for (int i = 0; i < k; ++i) s.vertices.push_back({"v" + std::to_string(i), 0});
    int e = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            s.edges.push_back({"e" + std::to_string(e++), "v" + std::to_string(i),
                               "v" + std::to_string(j), rng ? random_length(*rng) : Rat(1)});
    return s;
}

}  // namespace

Graph random_polarized(std::uint64_t seed, int n_vertices, int n_edges, long long q_budget) {
    std::mt19937_64 rng(seed);
    GraphSpec s;
    for (int i = 0; i < n_vertices; ++i) s.vertices.push_back({"v" + std::to_string(i), 0});
    // spanning tree then extra edges (loops and multi-edges allowed)
    for (int i = 1; i < n_vertices; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        s.edges.push_back({"t" + std::to_string(i), "v" + std::to_string(pick(rng)),
                           "v" + std::to_string(i), random_length(rng)});
    }
    std::uniform_int_distribution<int> anyv(0, n_vertices - 1);
    for (int i = static_cast<int>(s.edges.size()); i < n_edges; ++i)
        s.edges.push_back({"x" + std::to_string(i), "v" + std::to_string(anyv(rng)),
                           "v" + std::to_string(anyv(rng)), random_length(rng)});
    for (long long i = 0; i < q_budget; ++i) ++s.vertices[anyv(rng)].q;
    // repair canonical-divisor effectivity
    while (true) {
        auto r = Graph::validate(s);
        if (auto* g = std::get_if<Graph>(&r)) return std::move(*g);
        bool fixed = false;
        for (const auto& v : std::get<std::vector<Violation>>(r)) {
            if (v.kind != Defect::NonEffectiveK) continue;
            for (auto& vs : s.vertices)
                if (vs.id == v.subject) {
                    ++vs.q;
                    fixed = true;
                }
        }
        if (!fixed) throw DomainError("random_polarized could not repair spec");
    }
}

Graph random_pointed_sum(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nblocks(2, 5), kind(0, 3), qd(0, 2);
    int n = nblocks(rng);
    GraphSpec s;
    std::vector<std::string> hubs;  // one attachment vertex per block
    for (int bi = 0; bi < n; ++bi) {
        std::string p = "b" + std::to_string(bi) + "_";
        switch (kind(rng)) {
            case 0: {  // loop
                s.vertices.push_back({p + "a", qd(rng)});
                s.edges.push_back({p + "loop", p + "a", p + "a", random_length(rng)});
                hubs.push_back(p + "a");
                break;
            }
            case 1: {  // banana
                s.vertices.push_back({p + "u", qd(rng)});
                s.vertices.push_back({p + "v", qd(rng)});
                for (int i = 0; i < 3; ++i)
                    s.edges.push_back({p + "e" + std::to_string(i), p + "u", p + "v",
                                       random_length(rng)});
                hubs.push_back(p + "u");
                break;
            }
            case 2: {  // triangle
                for (int i = 0; i < 3; ++i)
                    s.vertices.push_back({p + "t" + std::to_string(i), qd(rng)});
                for (int i = 0; i < 3; ++i)
                    s.edges.push_back({p + "e" + std::to_string(i), p + "t" + std::to_string(i),
                                       p + "t" + std::to_string((i + 1) % 3), random_length(rng)});
                hubs.push_back(p + "t0");
                break;
            }
            default: {  // marked vertex with two loops
                s.vertices.push_back({p + "a", 1 + qd(rng)});
                s.edges.push_back({p + "l0", p + "a", p + "a", random_length(rng)});
                s.edges.push_back({p + "l1", p + "a", p + "a", random_length(rng)});
                hubs.push_back(p + "a");
                break;
            }
        }
        if (bi > 0) {
            // glue to an earlier block, sometimes through a bridge edge
            std::uniform_int_distribution<int> prev(0, bi - 1);
            s.edges.push_back({"glue" + std::to_string(bi), hubs[prev(rng)], hubs[bi],
                               random_length(rng)});
        }
    }
    return Graph::must(s);
}

std::vector<Graph> generate_family(const FamilySpec& spec) {
    auto param = [&](const std::string& k, long long dflt) {
        auto it = spec.params.find(k);
        return it == spec.params.end() ? dflt : it->second;
    };
    std::mt19937_64 rng(spec.seed);
    std::vector<Graph> out;
    for (int i = 0; i < spec.count; ++i) {
        if (spec.name == "circles") {
            int g = 2 + static_cast<int>(i % 4);
            out.push_back(Graph::must(single_vertex_circle_graph(g, random_length(rng))));
        } else if (spec.name == "chains-of-circles") {
            int k = static_cast<int>(param("k", 2 + i % 3));
            out.push_back(Graph::must(chain_spec(k, param("g", k), &rng)));
        } else if (spec.name == "banana") {
            int m = static_cast<int>(param("m", 3 + i % 3));
            out.push_back(Graph::must(banana_spec(m, &rng)));
        } else if (spec.name == "theta-variants") {
            auto s = banana_spec(3, &rng);
            s.vertices[0].q = i % 2;
            out.push_back(Graph::must(s));
        } else if (spec.name == "random-polarized") {
            out.push_back(random_polarized(spec.seed + i,
                                           static_cast<int>(param("vertices", 4)),
                                           static_cast<int>(param("edges", 6)),
                                           param("q", 1)));
        } else if (spec.name == "wheel") {
            out.push_back(Graph::must(wheel_spec(3 + i % 3, &rng)));
        } else if (spec.name == "complete") {
            out.push_back(Graph::must(complete_spec(static_cast<int>(param("k", 4)), &rng)));
        } else {
            throw DomainError("InvalidSpec: unknown family " + spec.name);
        }
    }
    return out;
}

}  // namespace mg
