// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "mg/cli.hpp"
#include "mg/closed_forms.hpp"
#include "mg/complex_pairing.hpp"
#include "mg/conjectures.hpp"
#include "mg/root_numbers.hpp"

using namespace mg;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void report(int number, const std::string& title, bool ok) {
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", number, title.c_str());
    for (const auto& n : g_notes) std::printf("       %s\n", n.c_str());
    g_notes.clear();
    if (!ok) ++g_failures;
}

bool bridge_closed_form() {
    for (int g = 2; g <= 6; ++g)
        for (int i = 1; 2 * i <= g; ++i)
            for (Rat ell : {Rat(1), Rat(3, 2), Rat(7)}) {
                InvariantBundle b = invariant_bundle(Graph::must(bridge_graph(g, i, ell)));
                Rat tau_cf = Rat(1LL * i * (g - i)) * ell / (1LL * g * g);
                Rat eps_cf = (Rat(4LL * i * (g - i)) / g - 1) * ell;
                if (b.tau != tau_cf || b.epsilon != eps_cf) return false;
                InvariantBundle cf = bridge_bundle(g, i, ell);
                if (cf.tau != b.tau || cf.epsilon != b.epsilon || cf.phi != b.phi ||
                    cf.lambda != b.lambda)
                    return false;
            }
    return true;
}

bool circle_equality_case() {
    for (int g = 2; g <= 6; ++g)
        for (Rat ell : {Rat(1), Rat(5, 3)}) {
            InvariantBundle b = invariant_bundle(Graph::must(single_vertex_circle_graph(g, ell)));
            if (b.phi != Rat(g - 1) * ell / (6 * g)) return false;
            if (b.lambda != Rat(g) * ell / (8 * g + 4)) return false;
        }
    return true;
}

bool dumbbell_example() {
    Graph g = Graph::must(mgt::dumbbell());
    InvariantBundle b = invariant_bundle(g);
    if (b.tau != Rat(3, 8) || b.epsilon != Rat(4, 3) || b.phi != Rat(7, 6) ||
        b.lambda != Rat(2, 5))
        return false;
    return check_phi_bound(g, b).verdict == Verdict::Equality &&
           check_lambda_bound(g, b).verdict == Verdict::Equality;
}

bool additivity() {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = random_pointed_sum(seed);
        InvariantBundle direct = invariant_bundle(g);
        InvariantBundle sum = additive_bundle(g);
        if (sum.tau != direct.tau || sum.epsilon != direct.epsilon || sum.phi != direct.phi ||
            sum.lambda != direct.lambda)
            return false;
    }
    return true;
}

bool lambda_cross_formula() {
    std::vector<GraphSpec> corpus = {mgt::theta(),        mgt::theta(1, 2, 3),
                                     mgt::dumbbell(),     mgt::k4(),
                                     mgt::banana(4),      mgt::banana(5, Rat(2, 3)),
                                     mgt::circle_chain(3), mgt::circle_chain(4),
                                     mgt::segment(1, 2, Rat(5, 7))};
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        corpus.push_back(random_polarized(seed, 4, 6, 2).spec());
    for (const GraphSpec& s : corpus) {
        InvariantBundle b = invariant_bundle(Graph::must(s));
        if (b.lambda != lambda_from(b.genus, b.tau, b.epsilon, b.ell)) return false;
        if (b.lambda != lambda_via_phi(b.genus, b.phi, b.epsilon, b.ell)) return false;
    }
    return true;
}

bool trivial_bounds_random() {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Graph g = random_polarized(seed, 3 + seed % 4, 4 + seed % 5, 1 + seed % 3);
        TwoSidedReport r = check_trivial_bounds(g);
        if (r.lower.verdict == Verdict::Fails || r.upper.verdict == Verdict::Fails) return false;
    }
    return true;
}

GraphSpec star_spec(int arms) {
    GraphSpec s;
    s.vertices.push_back({"A", 1});
    for (int i = 0; i < arms; ++i) {
        s.vertices.push_back({"t" + std::to_string(i), 1});
        s.edges.push_back({"e" + std::to_string(i), "A", "t" + std::to_string(i), 1});
    }
    return s;
}

LatticeDivisor corner_div(std::shared_ptr<const ProductComplex> cx, int n1, int n2) {
    LatticeDivisor d = zero_divisor(cx);
    d.corner[cx->corner_index(n1, n2)] = 1;
    return d;
}

LatticeDivisor center_div(std::shared_ptr<const ProductComplex> cx, int cell) {
    LatticeDivisor d = zero_divisor(cx);
    d.center[cell] = Rat(1, 2);
    return d;
}

bool intersection_table() {
    // singular points with s(A) = 3, s(B) = 2
    Graph g1 = Graph::must(star_spec(3)), g2 = Graph::must(star_spec(2));
    auto cx = std::make_shared<ProductComplex>(g1, g2, 1);
    LatticeDivisor ab = corner_div(cx, g1.vertex_index("A"), g2.vertex_index("A"));
    if (discrete_triple(ab, ab, ab) != 12) return false;  // 2 s(A) s(B)

    Graph seg = Graph::must(mgt::segment());
    auto cx2 = std::make_shared<ProductComplex>(g1, seg, 1);
    LatticeDivisor ab0 = corner_div(cx2, g1.vertex_index("A"), 0);
    LatticeDivisor ab1 = corner_div(cx2, g1.vertex_index("A"), 1);
    if (discrete_triple(ab0, ab0, ab1) != -3) return false;  // -s(A)

    auto c1 = std::make_shared<ProductComplex>(seg, seg, 1);
    LatticeDivisor b00 = corner_div(c1, 0, 0), b01 = corner_div(c1, 0, 1);
    LatticeDivisor b10 = corner_div(c1, 1, 0), b11 = corner_div(c1, 1, 1);
    LatticeDivisor E = center_div(c1, 0);
    bool ok = discrete_triple(b00, b01, E) == 1 &&   // {AB0, AB1, E}
              discrete_triple(b00, b11, b01) == 0 && // three distinct components
              discrete_triple(b00, b00, b01) == -1 &&
              discrete_triple(E, E, E) == 2 &&
              discrete_triple(b00, b00, E) == 0;
    // E^2 restrictions: -1 against each incident component
    for (const LatticeDivisor* d : {&b00, &b01, &b10, &b11})
        ok = ok && discrete_triple(E, E, *d) == -1;
    return ok;
}

bool subdivision_invariance() {
    GraphSpec path2;
    path2.vertices = {{"a", 1}, {"m", 0}, {"b", 1}};
    path2.edges = {{"e0", "a", "m", 1}, {"e1", "m", "b", 1}};
    for (const GraphSpec& fs : {mgt::segment(), path2}) {
        Graph f = Graph::must(fs);
        auto cx = std::make_shared<ProductComplex>(f, f, 1);
        std::vector<LatticeDivisor> basis;
        for (int a = 0; a < cx->node_count1(); ++a)
            for (int b = 0; b < cx->node_count2(); ++b) basis.push_back(corner_div(cx, a, b));
        for (int c = 0; c < cx->cell_count(); ++c) basis.push_back(center_div(cx, c));
        for (int n = 2; n <= 4; ++n) {
            std::vector<LatticeDivisor> up;
            for (const auto& d : basis) up.push_back(pullback_subdivide(d, n));
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = 0; j < basis.size(); ++j)
                    for (size_t k = 0; k < basis.size(); ++k)
                        if (discrete_triple(up[i], up[j], up[k]) !=
                            discrete_triple(basis[i], basis[j], basis[k]))
                            return false;
        }
    }
    return true;
}

bool convergence() {
    Graph seg = Graph::must(mgt::segment());
    auto cx1 = std::make_shared<ProductComplex>(seg, seg, 1);
    LatticeDivisor xy =
        sample_divisor(cx1, [](int, const Rat& a, int, const Rat& b) { return a * b; });
    if (discrete_triple(xy, xy, xy) != Rat(3, 2)) return false;
    CellFunction cxy{seg, seg, {}, {}, {}, {}, {}, {}};
    cxy.f = [](int, int, double x, double y, int) { return x * y; };
    cxy.fx = [](int, int, double, double y, int) { return y; };
    cxy.fy = [](int, int, double x, double, int) { return x; };
    cxy.fxx = [](int, int, double, double, int) { return 0.0; };
    if (std::fabs(continuous_triple(cxy, cxy, cxy) - 1.5) > 1e-9) return false;

    // three distinct smooth functions
    auto F1 = [](double x, double y) { return std::sin(x) * y + x * x; };
    auto F2 = [](double x, double y) { return std::exp(x * y / 2.0); };
    auto F3 = [](double x, double y) { return x * x * y + y * y; };
    CellFunction c1{seg, seg, {}, {}, {}, {}, {}, {}};
    c1.f = [F1](int, int, double x, double y, int) { return F1(x, y); };
    c1.fx = [](int, int, double x, double y, int) { return std::cos(x) * y + 2 * x; };
    c1.fy = [](int, int, double x, double, int) { return std::sin(x); };
    c1.fxx = [](int, int, double x, double y, int) { return -std::sin(x) * y + 2; };
    CellFunction c2{seg, seg, {}, {}, {}, {}, {}, {}};
    c2.f = [F2](int, int, double x, double y, int) { return F2(x, y); };
    c2.fx = [F2](int, int, double x, double y, int) { return y / 2 * F2(x, y); };
    c2.fy = [F2](int, int, double x, double y, int) { return x / 2 * F2(x, y); };
    c2.fxx = [F2](int, int, double x, double y, int) { return y * y / 4 * F2(x, y); };
    CellFunction c3{seg, seg, {}, {}, {}, {}, {}, {}};
    c3.f = [F3](int, int, double x, double y, int) { return F3(x, y); };
    c3.fx = [](int, int, double x, double y, int) { return 2 * x * y; };
    c3.fy = [](int, int, double x, double y, int) { return x * x + 2 * y; };
    c3.fxx = [](int, int, double, double y, int) { return 2 * y; };

    double cont = continuous_triple(c1, c2, c3);
    double err8 = 0, prev = 0;
    std::ostringstream os;
    os << "convergence ratios:";
    for (int n : {8, 16, 32}) {
        auto cx = std::make_shared<ProductComplex>(seg, seg, n);
        auto samp = [&](auto F) {
            return sample_divisor(cx, [&](int, const Rat& a, int, const Rat& b) {
                return rat_from_double(F(to_double(a), to_double(b)));
            });
        };
        double err = std::fabs(to_double(discrete_triple(samp(F1), samp(F2), samp(F3))) - cont);
        if (n == 8) err8 = err;
        if (err > err8 * 8.0 / n + 1e-12) return false;
        if (prev > 0) {
            double ratio = prev / err;
            os << ' ' << n / 2 << "->" << n << ": " << ratio;
            if (ratio < 1.6 || ratio > 4.5) return false;
        }
        prev = err;
    }
    note(os.str());
    return true;
}

bool green_identities() {
    Graph th = Graph::must(mgt::theta());
    GreenTable t(th);
    const Rat ell = th.total_length();
    const int g = th.genus();
    GraphPoint e = vertex_point(0);
    Rat gee = t.green_diagonal(e);

    // right sides and exact correction terms from the admissible module
    Rat corr1 = t.tau() - gee;
    Rat corr2 = -gee;
    // int G(x,x) (K - 4(g-1) dmu) = (eps - (2g-2) tau) - 4(g-1) tau
    Rat corr3 = t.epsilon() - Rat(6 * g - 6) * t.tau();
    Rat target3 = ell / 4 + (t.epsilon() - Rat(12 * g) * t.tau()) / 4;

    double errs[3][3];
    int idx = 0;
    for (int n : {8, 16, 32}) {
        auto cx = std::make_shared<ProductComplex>(th, th, n);
        auto sample = [&](std::function<Rat(int, const Rat&, int, const Rat&)> f) {
            return sample_divisor(cx, f);
        };
        LatticeDivisor G = sample([&](int e1, const Rat& a, int e2, const Rat& b) {
            return t.green(edge_point(th, e1, a * th.length(e1)),
                           edge_point(th, e2, b * th.length(e2)));
        });
        LatticeDivisor p1 = sample([&](int e1, const Rat& a, int, const Rat&) {
            return t.green(e, edge_point(th, e1, a * th.length(e1)));
        });
        LatticeDivisor p2 = sample([&](int, const Rat&, int e2, const Rat& b) {
            return t.green(e, edge_point(th, e2, b * th.length(e2)));
        });
        Rat l1 = corr1 + discrete_triple(G, G, p1);
        Rat l2 = corr2 + discrete_triple(G, p1, p2);
        Rat l3 = corr3 + discrete_triple(G, G, G);
        errs[idx][0] = std::fabs(to_double(l1));
        errs[idx][1] = std::fabs(to_double(l2));
        errs[idx][2] = std::fabs(to_double(l3 - target3));
        ++idx;
    }
    std::ostringstream os;
    os << "green identity errors at n=32:";
    for (int k = 0; k < 3; ++k) os << ' ' << errs[2][k];
    note(os.str());
    for (int k = 0; k < 3; ++k) {
        double c = errs[0][k] * 8.0;  // C calibrated at n=8
        if (errs[1][k] > c / 16 + 1e-12 || errs[2][k] > c / 32 + 1e-12) return false;
        if (errs[2][k] >= 0.02 * to_double(ell)) return false;
    }
    return true;
}

// direct exponent evaluation, independent of the implementation's shortcuts
int direct_nonarch_sign(long long g, long long e, int tau) {
    if (e == 0) return 1;
    int s = 1;
    long long exp1 = e * (e - 1) * (e - 2) / 6 + g * e;
    for (long long i = 0; i < exp1; ++i) s = -s;
    long long exp2 = (e - 1) * (e - 2) / 2 + g;
    for (long long i = 0; i < exp2; ++i) s *= tau;
    return s;
}

bool root_numbers() {
    int cases = 0;
    for (int g = 1; g <= 8; ++g)
        for (long long e = 0; e <= 5; ++e)
            for (int tau : {1, -1}) {
                LocalPlaceData p;
                p.kind = PlaceKind::Nonarchimedean;
                p.g = g;
                p.e = e;
                p.tau = tau;
                if (local_epsilon(p) != direct_nonarch_sign(g, e, tau)) return false;
                ++cases;
            }
    for (int g = 1; g <= 8; ++g) {
        LocalPlaceData r, c;
        r.kind = PlaceKind::Real;
        c.kind = PlaceKind::Complex;
        r.g = c.g = g;
        r.e = c.e = 0;
        int sr = 1, sc = 1;
        for (long long i = 0; i < 1LL * g * (g - 1) / 2; ++i) sr = -sr;
        for (long long i = 0; i < 1LL * g * (g + 1) * (g + 2) / 6; ++i) sc = -sc;
        if (local_epsilon(r) != sr || local_epsilon(c) != sc) return false;
        // periodicity 4 in g
        LocalPlaceData r4 = r, c4 = c;
        r4.g = c4.g = g + 4;
        if (local_epsilon(r4) != local_epsilon(r) || local_epsilon(c4) != local_epsilon(c))
            return false;
        cases += 2;
    }
    note("sign cases checked: " + std::to_string(cases));

    std::vector<LocalPlaceData> fixture;
    auto add = [&](PlaceKind k, int g, long long e = 0, int tau = 1) {
        LocalPlaceData p;
        p.kind = k;
        p.g = g;
        p.e = e;
        p.tau = tau;
        fixture.push_back(p);
    };
    add(PlaceKind::Real, 3);
    add(PlaceKind::Complex, 2);
    add(PlaceKind::Nonarchimedean, 2, 2, -1);
    add(PlaceKind::Nonarchimedean, 3, 3, 1);
    add(PlaceKind::Nonarchimedean, 4, 1, -1);
    int product = 1;
    for (const auto& p : fixture) product *= local_epsilon(p);
    return global_epsilon(fixture) == product;
}

bool harness() {
    for (const char* family : {"circles", "chains-of-circles", "theta-variants", "banana"}) {
        std::ostringstream out, err;
        int code = run_command({"check", "--family", family, "--count", "8", "--seed", "17",
                                "--bound", "phi"},
                               out, err);
        if (code != 0) {
            note(std::string(family) + " exited with " + std::to_string(code));
            return false;
        }
        if (out.str().find("\"violations\": 0") == std::string::npos) return false;
    }
    // flagged non-elementary graphs appear without tripping the exit code
    {
        std::ostringstream out, err;
        int code = run_command({"check", "--family", "banana", "--count", "4", "--seed", "17",
                                "--bound", "phi"},
                               out, err);
        if (code != 0 || out.str().find("\"flagged\": true") == std::string::npos) return false;
    }
    // the exit-code-3 path, exercised by an artificial c override
    std::ostringstream out, err;
    int code = run_command({"check", "--family", "circles", "--count", "4", "--seed", "17",
                            "--bound", "phi", "--c", "10"},
                           out, err);
    return code == 3;
}

}  // namespace

int main() {
    report(1, "bridge closed form (tau, epsilon) over g=2..6", bridge_closed_form());
    report(2, "single-vertex circle equality case (phi, lambda)", circle_equality_case());
    report(3, "dumbbell worked example and tight bounds", dumbbell_example());
    report(4, "additivity over 50 random pointed sums", additivity());
    report(5, "lambda cross-formula on the corpus", lambda_cross_formula());
    report(6, "trivial phi bounds on 200 random polarized graphs", trivial_bounds_random());
    report(7, "intersection table on model complexes", intersection_table());
    report(8, "subdivision invariance for n=1..4", subdivision_invariance());
    report(9, "discrete/continuous agreement and convergence", convergence());
    report(10, "green identities on the theta graph", green_identities());
    report(11, "root number tables, periodicity, global product", root_numbers());
    report(12, "conjecture harness over the named families", harness());
    if (g_failures > 0) {
        std::printf("%d criteria failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
