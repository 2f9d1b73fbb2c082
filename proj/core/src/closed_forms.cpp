#include "mg/closed_forms.hpp"

#include <algorithm>

namespace mg {

namespace {

InvariantBundle finish(int g, const Rat& ell, const Rat& tau, const Rat& eps,
                       std::map<long long, Rat> tl) {
    InvariantBundle b;
    b.genus = g;
    b.ell = ell;
    b.tau = tau;
    b.epsilon = eps;
    b.phi = phi_from(g, tau, eps, ell);
    b.lambda = lambda_from(g, tau, eps, ell);
    b.type_lengths = std::move(tl);
    return b;
}

}  // namespace

InvariantBundle bridge_bundle(int g, int i, const Rat& ell) {
    if (i < 1 || 2 * i > g) throw DomainError("InvalidSideGenus");
    if (ell <= 0) throw DomainError("NonPositiveLength");
    Rat igi(static_cast<long long>(i) * (g - i));
    Rat tau = igi * ell / (static_cast<long long>(g) * g);
    Rat eps = (4 * igi / g - 1) * ell;
    return finish(g, ell, tau, eps, {{i, ell}});
}

InvariantBundle single_vertex_circle_bundle(int g, const Rat& ell) {
    if (g < 1) throw DomainError("GenusZero");
    if (ell <= 0) throw DomainError("NonPositiveLength");
    Rat tau = Rat(2 * static_cast<long long>(g) - 1) * ell / (12LL * g * g);
    Rat eps = Rat(g - 1) * ell / (3LL * g);
    return finish(g, ell, tau, eps, {{0, ell}});
}

GraphSpec bridge_graph(int g, int i, const Rat& ell) {
    GraphSpec s;
    s.vertices = {{"a", i}, {"b", g - i}};
    s.edges = {{"e", "a", "b", ell}};
    return s;
}

GraphSpec single_vertex_circle_graph(int g, const Rat& ell) {
    GraphSpec s;
    s.vertices = {{"A", g - 1}};
    s.edges = {{"loop", "A", "A", ell}};
    return s;
}

GraphSpec circle_graph(int g, const std::vector<CircleMark>& marks, const Rat& ell) {
    long long qs = 0;
    for (const auto& m : marks) qs += m.q;
    if (qs != g - 1) throw DomainError("GenusMismatch");
    auto sorted = marks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CircleMark& a, const CircleMark& b) { return a.position < b.position; });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i].position == sorted[i + 1].position)
            throw DomainError("GenusMismatch: coincident marks");
    GraphSpec s;
    int n = static_cast<int>(sorted.size());
    for (int i = 0; i < n; ++i)
        s.vertices.push_back({"m" + std::to_string(i), sorted[i].q});
    if (n == 1) {
        s.edges.push_back({"arc0", "m0", "m0", ell});
        return s;
    }
    for (int i = 0; i < n; ++i) {
        Rat next = (i + 1 < n) ? sorted[i + 1].position : sorted[0].position + ell;
        s.edges.push_back({"arc" + std::to_string(i), "m" + std::to_string(i),
                           "m" + std::to_string((i + 1) % n), next - sorted[i].position});
    }
    return s;
}

InvariantBundle circle_bundle(int g, const std::vector<CircleMark>& marks, const Rat& ell) {
    if (marks.size() == 1) return single_vertex_circle_bundle(g, ell);
    return invariant_bundle(Graph::must(circle_graph(g, marks, ell)));
}

InvariantBundle additive_bundle(const Graph& g) {
    auto comps = decompose_pointed_sum(g);
    InvariantBundle total;
    total.genus = g.genus();
    total.ell = 0;
    total.tau = total.epsilon = total.phi = total.lambda = 0;
    total.type_lengths = g.type_lengths();
    for (const auto& c : comps) {
        const Graph& cg = c.graph;
        InvariantBundle b;
        if (cg.edge_count() == 1 && cg.vertex_count() == 2 && cg.is_bridge(0)) {
            long long i = std::min(cg.q(0), cg.q(1));
            b = bridge_bundle(cg.genus(), static_cast<int>(i), cg.length(0));
        } else if (cg.edge_count() == 1 && cg.vertex_count() == 1) {
            b = single_vertex_circle_bundle(cg.genus(), cg.length(0));
        } else {
            b = invariant_bundle(cg);
        }
        total.ell += b.ell;
        total.tau += b.tau;
        total.epsilon += b.epsilon;
        total.phi += b.phi;
        total.lambda += b.lambda;
    }
    return total;
}

}  // namespace mg
