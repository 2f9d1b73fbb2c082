#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mg/graph.hpp"
#include "mg/resistance.hpp"

namespace mg {

struct AdmissibleMeasure {
    // vertex atoms q(x)/g, zero-mass vertices omitted
    std::vector<std::pair<int, Rat>> atoms;
    // per-edge uniform density 1/(g (l_e + r_e)); exactly 0 on bridges
    std::vector<Rat> edge_density;
    Rat total_mass(const Graph& g) const;
};

struct InvariantBundle {
    int genus = 0;
    Rat ell, tau, epsilon, phi, lambda;
    std::map<long long, Rat> type_lengths;
};

AdmissibleMeasure admissible_measure(const Graph& g);  // throws GenusZero

// Exact per-graph tables: the invariants plus polynomial representations of
// A(x) = int r(x,.) dmu and of r on products of edges, so Green values at
// arbitrary rational points cost only polynomial evaluation.
class GreenTable {
  public:
    explicit GreenTable(const Graph& g);

    const Graph& graph() const { return *g_; }
    const AdmissibleMeasure& measure() const { return mu_; }
    const Rat& tau() const { return tau_; }
    const Rat& epsilon() const { return eps_; }

    Rat A(const GraphPoint& x) const;
    const Poly& A_poly(int e) const { return apoly_[e]; }
    Rat resistance(const GraphPoint& x, const GraphPoint& y) const;
    Rat green(const GraphPoint& x, const GraphPoint& y) const;
    Rat green_diagonal(const GraphPoint& x) const { return A(x) - tau_; }

    // r(y_e(t), y_f(u)) as a bivariate polynomial, valid for e != f
    const BivarPoly& cross_resistance(int e, int f) const;

  private:
    const Graph* g_;
    AdmissibleMeasure mu_;
    Rat tau_, eps_;
    std::vector<Rat> rvv_;                // vertex-pair resistances, packed
    std::vector<std::optional<Rat>> re_;  // complement resistances
    std::vector<Rat> avert_;              // A at vertices
    std::vector<Poly> apoly_;             // A along each edge
    std::vector<std::vector<BivarPoly>> rcross_;
    Rat rvv(int v, int w) const;
};

InvariantBundle invariant_bundle(const Graph& g);

Rat tau(const Graph& g);
Rat epsilon_invariant(const Graph& g);
Rat phi(const Graph& g);
Rat lambda_invariant(const Graph& g);

Rat green_value(const Graph& g, const GraphPoint& x, const GraphPoint& y);
Rat green_diagonal(const Graph& g, const GraphPoint& x);

// phi and lambda from (tau, epsilon, ell) for a given genus
Rat phi_from(int genus, const Rat& tau, const Rat& eps, const Rat& ell);
Rat lambda_from(int genus, const Rat& tau, const Rat& eps, const Rat& ell);
// the equivalent lambda expression through phi
Rat lambda_via_phi(int genus, const Rat& phi, const Rat& eps, const Rat& ell);

}  // namespace mg
