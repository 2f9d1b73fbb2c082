#include "mg/complex_pairing.hpp"

#include <cmath>
#include <utility>

namespace mg {

ProductComplex::ProductComplex(Graph g1, Graph g2, int level)
    : g1_(std::move(g1)), g2_(std::move(g2)), n_(level) {
    if (n_ < 1) throw DomainError("InvalidLevel: level must be >= 1");
    nodes1_ = g1_.vertex_count() + g1_.edge_count() * (n_ - 1);
    nodes2_ = g2_.vertex_count() + g2_.edge_count() * (n_ - 1);
}

int ProductComplex::node_of(const Graph& g, int e, int k) const {
    if (k == 0) return g.edge_u(e);
    if (k == n_) return g.edge_v(e);
    return g.vertex_count() + e * (n_ - 1) + (k - 1);
}

GraphPoint ProductComplex::node_point(const Graph& g, int node) const {
    if (node < g.vertex_count()) return vertex_point(node);
    int idx = node - g.vertex_count();
    int e = idx / (n_ - 1), k = idx % (n_ - 1) + 1;
    return edge_point(g, e, g.length(e) * k / n_);
}

ProductComplex::CellRef ProductComplex::cell_ref(int cell) const {
    int s1 = cell / segment_count2(), s2 = cell % segment_count2();
    return {s1 / n_, s1 % n_, s2 / n_, s2 % n_};
}

std::array<int, 4> ProductComplex::cell_corners(int cell) const {
    auto [e1, i1, e2, i2] = cell_ref(cell);
    int a0 = node_of(g1_, e1, i1), a1 = node_of(g1_, e1, i1 + 1);
    int b0 = node_of(g2_, e2, i2), b1 = node_of(g2_, e2, i2 + 1);
    return {corner_index(a0, b0), corner_index(a1, b0), corner_index(a0, b1),
            corner_index(a1, b1)};
}

LatticeDivisor zero_divisor(std::shared_ptr<const ProductComplex> cx) {
    LatticeDivisor d;
    d.corner.assign(cx->corner_count(), Rat(0));
    d.center.assign(cx->cell_count(), Rat(0));
    d.complex = std::move(cx);
    return d;
}

namespace {

long long rat_floor(const Rat& x) {
    // x >= 0 throughout this module
    return static_cast<long long>(
        (boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x))
            .convert_to<long long>());
}

// chart (edge, normalized position) for a lattice node; vertices pick any
// incident edge end, which is enough for continuous functions
std::pair<int, Rat> node_chart(const Graph& g, int n, int node) {
    if (node >= g.vertex_count()) {
        int idx = node - g.vertex_count();
        return {idx / (n - 1), Rat(idx % (n - 1) + 1, n)};
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edge_u(e) == node) return {e, Rat(0)};
        if (g.edge_v(e) == node) return {e, Rat(1)};
    }
    throw DomainError("internal: isolated lattice node");
}

}  // namespace

Rat PLFunction::eval(int e1, const Rat& a, int e2, const Rat& b) const {
    const ProductComplex& cx = *complex;
    int n = cx.level();
    Rat an = a * n, bn = b * n;
    long long i1 = std::min<long long>(rat_floor(an), n - 1);
    long long i2 = std::min<long long>(rat_floor(bn), n - 1);
    Rat u = an - i1, v = bn - i2;
    int cell = cx.cell_index(e1 * n + static_cast<int>(i1), e2 * n + static_cast<int>(i2));
    auto cs = cx.cell_corners(cell);
    const Rat& z1 = corner[cs[0]];
    const Rat& z2 = corner[cs[1]];
    const Rat& z3 = corner[cs[2]];
    const Rat& z4 = corner[cs[3]];
    const Rat& zc = center[cell];
    // fan triangulation: four triangles meeting at the center
    if (v <= u && u + v <= 1) return z1 + (z2 - z1) * u + (2 * zc - z1 - z2) * v;
    if (v <= u) return z2 + (z4 - z2) * v + (2 * zc - z2 - z4) * (1 - u);
    if (u + v <= 1) return z1 + (z3 - z1) * v + (2 * zc - z1 - z3) * u;
    return z3 + (z4 - z3) * u + (2 * zc - z3 - z4) * (1 - v);
}

PLFunction divisor_to_function(const LatticeDivisor& d) {
    PLFunction f;
    f.complex = d.complex;
    int n = d.complex->level();
    f.corner.reserve(d.corner.size());
    for (const Rat& c : d.corner) f.corner.push_back(c / n);
    f.center.reserve(d.center.size());
    for (const Rat& c : d.center) f.center.push_back(c / n);
    return f;
}

LatticeDivisor sample_divisor(std::shared_ptr<const ProductComplex> cx,
                              const std::function<Rat(int, const Rat&, int, const Rat&)>& f) {
    const ProductComplex& c = *cx;
    int n = c.level();
    LatticeDivisor d = zero_divisor(cx);
    for (int a = 0; a < c.node_count1(); ++a) {
        auto [ea, ta] = node_chart(c.factor1(), n, a);
        for (int b = 0; b < c.node_count2(); ++b) {
            auto [eb, tb] = node_chart(c.factor2(), n, b);
            d.corner[c.corner_index(a, b)] = n * f(ea, ta, eb, tb);
        }
    }
    for (int cell = 0; cell < c.cell_count(); ++cell) {
        auto [e1, i1, e2, i2] = c.cell_ref(cell);
        d.center[cell] = n * f(e1, Rat(2 * i1 + 1, 2 * n), e2, Rat(2 * i2 + 1, 2 * n));
    }
    return d;
}

LatticeDivisor function_to_divisor(std::shared_ptr<const ProductComplex> cx,
                                   const std::function<Rat(int, const Rat&, int, const Rat&)>& f) {
    LatticeDivisor d = sample_divisor(cx, f);
    const ProductComplex& c = *cx;
    int n = c.level();
    // midpoint checks against every edge of the fan triangulation
    for (int cell = 0; cell < c.cell_count(); ++cell) {
        auto [e1, i1, e2, i2] = c.cell_ref(cell);
        Rat a0(i1, n), a1(i1 + 1, n), b0(i2, n), b1(i2 + 1, n);
        Rat am = (a0 + a1) / 2, bm = (b0 + b1) / 2;
        auto cs = c.cell_corners(cell);
        Rat z[4] = {d.corner[cs[0]], d.corner[cs[1]], d.corner[cs[2]], d.corner[cs[3]]};
        Rat zc = d.center[cell];
        struct Check {
            Rat a, b, expect;
        };
        Check checks[] = {
            {am, b0, (z[0] + z[1]) / 2},          {am, b1, (z[2] + z[3]) / 2},
            {a0, bm, (z[0] + z[2]) / 2},          {a1, bm, (z[1] + z[3]) / 2},
            {(a0 + am) / 2, (b0 + bm) / 2, (z[0] + zc) / 2},
            {(a1 + am) / 2, (b0 + bm) / 2, (z[1] + zc) / 2},
            {(a0 + am) / 2, (b1 + bm) / 2, (z[2] + zc) / 2},
            {(a1 + am) / 2, (b1 + bm) / 2, (z[3] + zc) / 2},
        };
        for (const auto& ck : checks)
            if (n * f(e1, ck.a, e2, ck.b) != ck.expect)
                throw DomainError("NotTriangulationLinear");
    }
    return d;
}

LatticeDivisor pullback_subdivide(const LatticeDivisor& d, int n) {
    if (d.complex->level() != 1)
        throw DomainError("LevelMismatch: pull-back starts from a level-1 divisor");
    PLFunction f = divisor_to_function(d);
    auto cx = std::make_shared<ProductComplex>(d.complex->factor1(), d.complex->factor2(), n);
    return sample_divisor(
        cx, [&](int e1, const Rat& a, int e2, const Rat& b) { return f.eval(e1, a, e2, b); });
}

Rat local_triple_kernel(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v,
                        const std::array<Rat, 4>& w) {
    Rat t = 0;
    for (int i = 0; i < 4; ++i) t += 2 * u[i] * v[i] * w[i];
    const std::array<Rat, 4>* p[3] = {&u, &v, &w};
    for (int c = 0; c < 3; ++c) {
        const auto& x = *p[c];
        const auto& y = *p[(c + 1) % 3];
        const auto& z = *p[(c + 2) % 3];
        t -= (x[0] * y[0] + x[3] * y[3]) * (z[1] + z[2]);
        t -= (x[1] * y[1] + x[2] * y[2]) * (z[0] + z[3]);
    }
    return t;
}

Rat discrete_triple(const LatticeDivisor& f1, const LatticeDivisor& f2, const LatticeDivisor& f3) {
    const ProductComplex& c = *f1.complex;
    for (const LatticeDivisor* d : {&f2, &f3})
        if (d->complex->level() != c.level() || d->corner.size() != f1.corner.size() ||
            d->center.size() != f1.center.size())
            throw DomainError("LevelMismatch");
    Rat total = 0;
    std::array<Rat, 4> u, v, w;
    for (int cell = 0; cell < c.cell_count(); ++cell) {
        auto cs = c.cell_corners(cell);
        for (int i = 0; i < 4; ++i) {
            u[i] = f1.corner[cs[i]] - f1.center[cell];
            v[i] = f2.corner[cs[i]] - f2.center[cell];
            w[i] = f3.corner[cs[i]] - f3.center[cell];
        }
        total += local_triple_kernel(u, v, w);
    }
    return total / c.level();
}

namespace {

constexpr double kGlNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double kGlWeight[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};

template <class F>
double gl_line(double a, double b, F&& f) {
    double mid = (a + b) / 2, half = (b - a) / 2, s = 0;
    for (int i = 0; i < 5; ++i) s += kGlWeight[i] * f(mid + half * kGlNode[i]);
    return s * half;
}

// one-sided triangle index at a vertical cell boundary of a diagonal cell
int side_tri(bool at_start) { return at_start ? 1 : 0; }

struct CellCtx {
    const CellFunction* fns[3];
    const Graph* g1;
    const Graph* g2;
    bool diag(int e1, int e2) const {
        const auto& d = fns[0]->diagonal;
        if (d.empty()) return false;
        return d[static_cast<size_t>(e1) * g2->edge_count() + e2] != 0;
    }
};

void check_continuity(const CellFunction& f, const Graph& g1, const Graph& g2) {
    // Theorem hypothesis: no jumps off the designated diagonals. Spot-check
    // value continuity across vertex lines in each factor.
    auto val = [&](int e1, int e2, double x, double y, int tri) {
        return f.f(e1, e2, x, y, tri);
    };
    for (int v = 0; v < g1.vertex_count(); ++v)
        for (int e2 = 0; e2 < g2.edge_count(); ++e2) {
            double y = to_double(g2.length(e2)) * 0.37;
            bool have = false;
            double ref = 0;
            for (int e1 = 0; e1 < g1.edge_count(); ++e1) {
                double L1 = to_double(g1.length(e1));
                for (int end = 0; end < 2; ++end) {
                    if ((end == 0 ? g1.edge_u(e1) : g1.edge_v(e1)) != v) continue;
                    double x = end == 0 ? 0.0 : L1;
                    double w = val(e1, e2, x, y, side_tri(end == 0));
                    if (!have) {
                        ref = w;
                        have = true;
                    } else if (std::fabs(w - ref) > 1e-7 * (1 + std::fabs(ref))) {
                        throw DomainError("HypothesisViolated: discontinuity at a vertex line");
                    }
                }
            }
        }
}

}  // namespace

double continuous_triple(const CellFunction& f1, const CellFunction& f2, const CellFunction& f3) {
    const Graph& g1 = f1.g1;
    const Graph& g2 = f1.g2;
    int E1 = g1.edge_count(), E2 = g2.edge_count();
    CellCtx ctx{{&f1, &f2, &f3}, &g1, &g2};
    for (const CellFunction* f : ctx.fns) check_continuity(*f, g1, g2);

    double total = 0;
    for (int c = 0; c < 3; ++c) {
        const CellFunction& fi = *ctx.fns[c];
        const CellFunction& fj = *ctx.fns[(c + 1) % 3];
        const CellFunction& fk = *ctx.fns[(c + 2) % 3];

        // smooth density: -f_ixx
        for (int e1 = 0; e1 < E1; ++e1) {
            double L1 = to_double(g1.length(e1));
            for (int e2 = 0; e2 < E2; ++e2) {
                double L2 = to_double(g2.length(e2));
                auto dens = [&](double x, double y, int tri) {
                    return -fi.fxx(e1, e2, x, y, tri) * fj.fy(e1, e2, x, y, tri) *
                           fk.fy(e1, e2, x, y, tri);
                };
                if (!ctx.diag(e1, e2)) {
                    total += gl_line(0, L1, [&](double x) {
                        return gl_line(0, L2, [&](double y) { return dens(x, y, 0); });
                    });
                } else {
                    // two triangles, collapsing map with jacobian L^2 s
                    for (int tri = 0; tri < 2; ++tri)
                        total += gl_line(0, 1, [&](double s) {
                            return gl_line(0, 1, [&](double t) {
                                double x = tri == 0 ? L1 * s : L1 * s * t;
                                double y = tri == 0 ? L1 * s * t : L1 * s;
                                return dens(x, y, tri) * L1 * L1 * s;
                            });
                        });
                }
            }
        }

        // vertex-line atoms: minus the sum of outgoing x-derivatives
        for (int v = 0; v < g1.vertex_count(); ++v) {
            for (int e2 = 0; e2 < E2; ++e2) {
                double L2 = to_double(g2.length(e2));
                total += gl_line(0, L2, [&](double y) {
                    double atom = 0;
                    int re = -1, rtri = 0;
                    double rx = 0;
                    for (int e1 = 0; e1 < E1; ++e1) {
                        double L1 = to_double(g1.length(e1));
                        for (int end = 0; end < 2; ++end) {
                            if ((end == 0 ? g1.edge_u(e1) : g1.edge_v(e1)) != v) continue;
                            double x = end == 0 ? 0.0 : L1;
                            int tri = ctx.diag(e1, e2) ? side_tri(end == 0) : 0;
                            double out = fi.fx(e1, e2, x, y, tri);
                            atom -= end == 0 ? out : -out;
                            if (re < 0) {
                                re = e1;
                                rtri = tri;
                                rx = x;
                            }
                        }
                    }
                    if (re < 0) return 0.0;
                    return atom * fj.fy(re, e2, rx, y, rtri) * fk.fy(re, e2, rx, y, rtri);
                });
            }
        }

        // diagonal line density delta(f_i), y-derivatives averaged over sides
        if (fi.jump) {
            for (int e1 = 0; e1 < E1 && e1 < E2; ++e1) {
                if (!ctx.diag(e1, e1)) continue;
                double L = to_double(g1.length(e1));
                total += gl_line(0, L, [&](double t) {
                    double ja = (fj.fy(e1, e1, t, t, 0) + fj.fy(e1, e1, t, t, 1)) / 2;
                    double ka = (fk.fy(e1, e1, t, t, 0) + fk.fy(e1, e1, t, t, 1)) / 2;
                    return fi.jump(e1, t) * ja * ka;
                });
            }
        }
    }

    // quarter triple-jump term along the diagonal
    if (f1.jump && f2.jump && f3.jump) {
        for (int e = 0; e < E1 && e < E2; ++e) {
            if (!ctx.diag(e, e)) continue;
            double L = to_double(g1.length(e));
            total += 0.25 * gl_line(0, L, [&](double t) {
                return f1.jump(e, t) * f2.jump(e, t) * f3.jump(e, t);
            });
        }
    }
    return total;
}

namespace {

struct DPoly {
    std::vector<double> c;
    double eval(double x) const {
        double s = 0;
        for (size_t i = c.size(); i-- > 0;) s = s * x + c[i];
        return s;
    }
    DPoly derivative() const {
        DPoly d;
        for (size_t i = 1; i < c.size(); ++i) d.c.push_back(i * c[i]);
        return d;
    }
};

DPoly dpoly(const Poly& p) {
    DPoly d;
    for (int i = 0; i <= p.degree(); ++i) d.c.push_back(to_double(p.coeff(i)));
    return d;
}

struct GreenData {
    double tau;
    std::vector<double> len, R;  // R = L + complement resistance
    std::vector<char> bridge;
    std::vector<DPoly> a, a1, a2;  // A along each edge and its derivatives
    // r(x on e, y on f) for e != f, coefficients of x^i y^j
    std::vector<std::vector<std::vector<std::vector<double>>>> cross;

    double cross_eval(int e, int f, double x, double y, int dx, int dy) const {
        const auto& m = cross[e][f];
        double s = 0;
        for (size_t i = dx; i < m.size(); ++i) {
            double fac = 1;
            for (int k = 0; k < dx; ++k) fac *= static_cast<double>(i - k);
            double xs = fac * std::pow(x, static_cast<double>(i - dx));
            for (size_t j = dy; j < m[i].size(); ++j) {
                double fy = 1;
                for (int k = 0; k < dy; ++k) fy *= static_cast<double>(j - k);
                s += xs * fy * std::pow(y, static_cast<double>(j - dy)) * m[i][j];
            }
        }
        return s;
    }
};

}  // namespace

CellFunction green_product_function(const Graph& g) {
    auto table = std::make_shared<GreenTable>(g);
    auto data = std::make_shared<GreenData>();
    int E = g.edge_count();
    data->tau = to_double(table->tau());
    data->len.resize(E);
    data->R.resize(E);
    data->bridge.resize(E);
    data->a.resize(E);
    data->a1.resize(E);
    data->a2.resize(E);
    data->cross.assign(E, std::vector<std::vector<std::vector<double>>>(E));
    for (int e = 0; e < E; ++e) {
        data->len[e] = to_double(g.length(e));
        auto re = edge_complement_resistance(g, e);
        data->bridge[e] = !re;
        data->R[e] = re ? to_double(g.length(e) + *re) : 0;
        data->a[e] = dpoly(table->A_poly(e));
        data->a1[e] = data->a[e].derivative();
        data->a2[e] = data->a1[e].derivative();
        for (int f = 0; f < E; ++f) {
            if (f == e) continue;
            std::vector<std::vector<double>> m;
            for (const auto& row : table->cross_resistance(e, f).coefficients()) {
                std::vector<double> dr;
                for (const Rat& c : row) dr.push_back(to_double(c));
                m.push_back(std::move(dr));
            }
            data->cross[e][f] = std::move(m);
        }
    }

    // r and its partials on a cell; tri: 0 for x > y, 1 for x < y
    auto rval = [data](int e, int f, double x, double y, int tri, int dx, int dy) -> double {
        if (e != f) return data->cross_eval(e, f, x, y, dx, dy);
        double d = tri == 0 ? x - y : y - x;
        double sx = tri == 0 ? 1 : -1;  // dd/dx
        if (data->bridge[e]) {
            if (dx + dy == 0) return d;
            if (dx + dy == 1) return dx ? sx : -sx;
            return 0;
        }
        double R = data->R[e];
        if (dx == 0 && dy == 0) return d * (R - d) / R;
        if (dx == 1 && dy == 0) return sx * (R - 2 * d) / R;
        if (dx == 0 && dy == 1) return -sx * (R - 2 * d) / R;
        if (dx == 2 && dy == 0) return -2 / R;
        if (dx == 0 && dy == 2) return -2 / R;
        return 2 / R;  // mixed second
    };

    CellFunction cf{g, g, {}, {}, {}, {}, {}, {}};
    cf.f =[data, rval](int e, int f, double x, double y, int tri) {
        return (data->a[e].eval(x) + data->a[f].eval(y) - rval(e, f, x, y, tri, 0, 0)) / 2 -
               data->tau;
    };
    cf.fx = [data, rval](int e, int f, double x, double y, int tri) {
        return (data->a1[e].eval(x) - rval(e, f, x, y, tri, 1, 0)) / 2;
    };
    cf.fy = [data, rval](int e, int f, double x, double y, int tri) {
        return (data->a1[f].eval(y) - rval(e, f, x, y, tri, 0, 1)) / 2;
    };
    cf.fxx = [data, rval](int e, int f, double x, double y, int tri) {
        return (data->a2[e].eval(x) - rval(e, f, x, y, tri, 2, 0)) / 2;
    };
    cf.diagonal.assign(static_cast<size_t>(E) * E, 0);
    for (int e = 0; e < E; ++e) cf.diagonal[static_cast<size_t>(e) * E + e] = 1;
    cf.jump = [](int, double) { return 1.0; };
    return cf;
}

}  // namespace mg
