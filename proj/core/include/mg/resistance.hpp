#pragma once

#include <optional>
#include <vector>

#include "mg/graph.hpp"
#include "mg/scalar.hpp"

namespace mg {

// Dense univariate polynomial with rational coefficients, low degree.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat v) { return Poly({std::move(v)}); }
    static Poly linear(Rat c0, Rat c1) { return Poly({std::move(c0), std::move(c1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    Rat eval(const Rat& t) const;
    Rat integral(const Rat& a, const Rat& b) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly derivative() const;

  private:
    void trim();
    std::vector<Rat> c_;  // c_[i] * t^i
};

// Polynomial in two variables, stored as coefficients of t^i * u^j.
class BivarPoly {
  public:
    BivarPoly() = default;
    // p(t) * q(u)
    static BivarPoly product(const Poly& p, const Poly& q);
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly& operator+=(const BivarPoly& o) { return *this = *this + o; }
    Rat eval(const Rat& t, const Rat& u) const;
    // partial derivatives
    BivarPoly dt() const;
    BivarPoly du() const;
    const std::vector<std::vector<Rat>>& coefficients() const { return c_; }

  private:
    std::vector<std::vector<Rat>> c_;  // c_[i][j] * t^i u^j
};

struct ProfilePiece {
    Rat t0, t1;
    Poly p;
};

// r(x, y_e(t)) along edge e: one quadratic piece, or two when x lies on e.
struct ResistanceProfile {
    int edge = -1;
    GraphPoint base;
    std::vector<ProfilePiece> pieces;
    Rat eval(const Rat& t) const;
    Rat integral() const;  // over the whole edge
};

// Effective resistance between two points; edges are resistors of resistance
// equal to their length. Interior points are realized by exact subdivision.
Rat point_resistance(const Graph& g, const GraphPoint& x, const GraphPoint& y);

// Resistance between the endpoints of e in the graph with e deleted;
// nullopt exactly when e is a bridge, 0 for a loop.
std::optional<Rat> edge_complement_resistance(const Graph& g, int e);

ResistanceProfile resistance_profile(const Graph& g, const GraphPoint& x, int e);

// Internals shared with the admissible module: same computations carried out
// in the graph with one edge deleted ("ambient" variants). deleted == -1
// means the full graph. Disconnected queries return nullopt.
std::optional<Rat> point_resistance_ex(const Graph& g, int deleted,
                                       const GraphPoint& x, const GraphPoint& y);
ResistanceProfile resistance_profile_ex(const Graph& g, int deleted,
                                        const GraphPoint& x, int e);
bool is_bridge_ex(const Graph& g, int deleted, int e);

}  // namespace mg
