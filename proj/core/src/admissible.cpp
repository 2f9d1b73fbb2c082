#include "mg/admissible.hpp"

#include <numeric>

namespace mg {

Rat AdmissibleMeasure::total_mass(const Graph& g) const {
    Rat m = 0;
    for (const auto& [v, mass] : atoms) m += mass;
    for (int e = 0; e < g.edge_count(); ++e) m += edge_density[e] * g.length(e);
    return m;
}

AdmissibleMeasure admissible_measure(const Graph& g) {
    int gen = g.genus();
    if (gen < 1) throw DomainError("GenusZero: admissible measure needs genus >= 1");
    AdmissibleMeasure mu;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.q(v) != 0) mu.atoms.push_back({v, Rat(g.q(v), gen)});
    mu.edge_density.assign(g.edge_count(), Rat(0));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto re = edge_complement_resistance(g, e);
        if (re) mu.edge_density[e] = Rat(1) / (Rat(gen) * (g.length(e) + *re));
    }
    return mu;
}

namespace {

// int_0^L (a + u)(b + L - u) du
Rat star_numerator_integral(const Rat& a, const Rat& b, const Rat& L) {
    return a * b * L + (a + b) * L * L / 2 + L * L * L / 6;
}

// t -> int_f r(y_e(t), y_f(u)) du for f != e, f not a bridge
Poly cross_edge_integral(const Graph& g, int e, int f) {
    const Rat& Lf = g.length(f);
    int p = g.edge_u(f), q = g.edge_v(f);
    auto rpq = point_resistance_ex(g, f, vertex_point(p), vertex_point(q));
    // profiles of f's endpoints along e, in the graph without f
    Poly Pp = resistance_profile_ex(g, f, vertex_point(p), e).pieces[0].p;
    Poly Pq = g.is_loop(f) ? Pp : resistance_profile_ex(g, f, vertex_point(q), e).pieces[0].p;
    Rat half(1, 2);
    Poly a = (Poly::constant(*rpq) + Pp - Pq) * half;
    Poly b = (Poly::constant(*rpq) + Pq - Pp) * half;
    Poly c = (Pp + Pq - Poly::constant(*rpq)) * half;
    Poly num = a * b * Lf + (a + b) * (Lf * Lf / 2) + Poly::constant(Lf * Lf * Lf / 6);
    return c * Lf + num * (1 / (*rpq + Lf));
}

// t -> int_e r(y_e(t), y_e(u)) du for non-bridge e with R = l_e + r_e
Poly same_edge_integral(const Rat& L, const Rat& R) {
    // [R (t^2 + (L-t)^2)/2 - (t^3 + (L-t)^3)/3] / R
    Poly t = Poly::linear(0, 1), s = Poly::linear(L, -1);
    Poly sum2 = t * t + s * s, sum3 = t * t * t + s * s * s;
    return (sum2 * (R / 2) - sum3 * Rat(1, 3)) * (1 / R);
}

}  // namespace

GreenTable::GreenTable(const Graph& g) : g_(&g) {
    mu_ = admissible_measure(g);
    int V = g.vertex_count(), E = g.edge_count();

    rvv_.assign(static_cast<size_t>(V) * V, Rat(0));
    for (int v = 0; v < V; ++v)
        for (int w = v + 1; w < V; ++w)
            rvv_[static_cast<size_t>(v) * V + w] = rvv_[static_cast<size_t>(w) * V + v] =
                point_resistance(g, vertex_point(v), vertex_point(w));

    re_.resize(E);
    for (int e = 0; e < E; ++e) re_[e] = edge_complement_resistance(g, e);

    // A along each edge as a single polynomial
    apoly_.resize(E);
    for (int e = 0; e < E; ++e) {
        Poly a;
        for (const auto& [v, mass] : mu_.atoms)
            a += resistance_profile(g, vertex_point(v), e).pieces[0].p * mass;
        for (int f = 0; f < E; ++f) {
            if (mu_.edge_density[f] == 0) continue;
            Poly part = (f == e) ? same_edge_integral(g.length(e), g.length(e) + *re_[e])
                                 : cross_edge_integral(g, e, f);
            a += part * mu_.edge_density[f];
        }
        apoly_[e] = a;
    }

    avert_.resize(V);
    for (int v = 0; v < V; ++v) {
        Rat a = 0;
        for (const auto& [w, mass] : mu_.atoms) a += rvv(v, w) * mass;
        for (int f = 0; f < E; ++f)
            if (mu_.edge_density[f] != 0)
                a += resistance_profile(g, vertex_point(v), f).integral() * mu_.edge_density[f];
        avert_[v] = a;
    }

    // tau = 1/2 double integral of r over the product measure
    Rat dbl = 0;
    for (const auto& [v, mv] : mu_.atoms)
        for (const auto& [w, mw] : mu_.atoms) dbl += mv * mw * rvv(v, w);
    for (const auto& [v, mv] : mu_.atoms)
        for (int f = 0; f < E; ++f)
            if (mu_.edge_density[f] != 0)
                dbl += 2 * mv * mu_.edge_density[f] *
                       resistance_profile(g, vertex_point(v), f).integral();
    for (int e = 0; e < E; ++e) {
        if (mu_.edge_density[e] == 0) continue;
        const Rat& L = g.length(e);
        Rat R = L + *re_[e];
        dbl += mu_.edge_density[e] * mu_.edge_density[e] * (L * L * L / 3 - L * L * L * L / (6 * R));
        for (int f = 0; f < E; ++f) {
            if (f == e || mu_.edge_density[f] == 0) continue;
            dbl += mu_.edge_density[e] * mu_.edge_density[f] *
                   cross_edge_integral(g, e, f).integral(0, L);
        }
    }
    tau_ = dbl / 2;

    eps_ = 0;
    for (int v = 0; v < V; ++v)
        if (g.ord_K(v) != 0) eps_ += Rat(g.ord_K(v)) * avert_[v];

    rcross_.assign(E, std::vector<BivarPoly>(E));
    for (int e = 0; e < E; ++e)
        for (int f = 0; f < E; ++f) {
            if (e == f) continue;
            BivarPoly& out = rcross_[e][f];
            if (!g.is_bridge(e)) {
                // star arms toward e's endpoints, as functions of u on f
                int p = g.edge_u(e), q = g.edge_v(e);
                Poly Pp = resistance_profile_ex(g, e, vertex_point(p), f).pieces[0].p;
                Poly Pq = g.is_loop(e)
                              ? Pp
                              : resistance_profile_ex(g, e, vertex_point(q), f).pieces[0].p;
                Rat rpq = *re_[e], half(1, 2);
                Poly a = (Poly::constant(rpq) + Pp - Pq) * half;
                Poly b = (Poly::constant(rpq) + Pq - Pp) * half;
                Poly c = (Pp + Pq - Poly::constant(rpq)) * half;
                const Rat& L = g.length(e);
                Rat D = rpq + L;
                // c(u) + (a(u) + t)(b(u) + L - t)/D
                Poly one = Poly::constant(1);
                out = BivarPoly::product(one, c);
                out += BivarPoly::product(one, (a * b + a * L) * (1 / D));
                out += BivarPoly::product(Poly::linear(0, 1), (b - a + Poly::constant(L)) * (1 / D));
                out += BivarPoly::product(Poly::linear(0, 1) * Poly::linear(0, -1), one * (1 / D));
            } else {
                // e is a bridge: f lies entirely on one side
                int p = g.edge_u(e), q = g.edge_v(e);
                auto side = point_resistance_ex(g, e, vertex_point(p),
                                                edge_point(g, f, g.length(f) / 2));
                Poly dist, prof;
                if (side) {
                    prof = resistance_profile_ex(g, e, vertex_point(p), f).pieces[0].p;
                    dist = Poly::linear(0, 1);
                } else {
                    prof = resistance_profile_ex(g, e, vertex_point(q), f).pieces[0].p;
                    dist = Poly::linear(g.length(e), -1);
                }
                out = BivarPoly::product(dist, Poly::constant(1));
                out += BivarPoly::product(Poly::constant(1), prof);
            }
        }
}

Rat GreenTable::rvv(int v, int w) const {
    return rvv_[static_cast<size_t>(v) * g_->vertex_count() + w];
}

Rat GreenTable::A(const GraphPoint& x) const {
    if (x.is_vertex()) return avert_[x.vertex];
    return apoly_[x.edge].eval(x.offset);
}

const BivarPoly& GreenTable::cross_resistance(int e, int f) const {
    if (e == f) throw DomainError("cross_resistance needs distinct edges");
    return rcross_[e][f];
}

Rat GreenTable::resistance(const GraphPoint& x, const GraphPoint& y) const {
    const Graph& g = *g_;
    if (same_point(g, x, y)) return 0;
    if (x.is_vertex() && y.is_vertex()) return rvv(x.vertex, y.vertex);
    if (x.is_vertex()) return resistance(y, x);
    if (y.is_vertex()) {
        // profile of the vertex along x's edge
        return resistance_profile(g, y, x.edge).eval(x.offset);
    }
    if (x.edge == y.edge) {
        const Rat& L = g.length(x.edge);
        Rat d = x.offset > y.offset ? x.offset - y.offset : y.offset - x.offset;
        if (!re_[x.edge]) return d;
        Rat R = L + *re_[x.edge];
        return d * (R - d) / R;
    }
    return rcross_[x.edge][y.edge].eval(x.offset, y.offset);
}

Rat GreenTable::green(const GraphPoint& x, const GraphPoint& y) const {
    return (A(x) + A(y) - resistance(x, y)) / 2 - tau_;
}

Rat phi_from(int genus, const Rat& tau, const Rat& eps, const Rat& ell) {
    return Rat(3 * genus) * tau - (eps + ell) / 4;
}

Rat lambda_from(int genus, const Rat& tau, const Rat& eps, const Rat& ell) {
    long long g = genus;
    return Rat(g * (g - 1), 2 * (2 * g + 1)) * tau + Rat(g + 1, 8 * (2 * g + 1)) * (ell + eps);
}

Rat lambda_via_phi(int genus, const Rat& phi, const Rat& eps, const Rat& ell) {
    long long g = genus;
    return Rat(g - 1, 6 * (2 * g + 1)) * phi + (eps + ell) / 12;
}

InvariantBundle invariant_bundle(const Graph& g) {
    GreenTable t(g);
    InvariantBundle b;
    b.genus = g.genus();
    b.ell = g.total_length();
    b.tau = t.tau();
    b.epsilon = t.epsilon();
    b.phi = phi_from(b.genus, b.tau, b.epsilon, b.ell);
    b.lambda = lambda_from(b.genus, b.tau, b.epsilon, b.ell);
    b.type_lengths = g.type_lengths();
    return b;
}

Rat tau(const Graph& g) { return GreenTable(g).tau(); }
Rat epsilon_invariant(const Graph& g) { return GreenTable(g).epsilon(); }

Rat phi(const Graph& g) {
    auto b = invariant_bundle(g);
    return b.phi;
}

Rat lambda_invariant(const Graph& g) {
    auto b = invariant_bundle(g);
    return b.lambda;
}

Rat green_value(const Graph& g, const GraphPoint& x, const GraphPoint& y) {
    return GreenTable(g).green(x, y);
}

Rat green_diagonal(const Graph& g, const GraphPoint& x) {
    return GreenTable(g).green_diagonal(x);
}

}  // namespace mg
