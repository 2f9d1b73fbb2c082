#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "mg/admissible.hpp"
#include "mg/graph.hpp"

namespace mg {

// Product of two metrized graphs, each edge split into n equal subsegments.
// Factor lattice nodes are the original vertices followed by the interior
// subdivision points; corners are node pairs, one center per cell.
class ProductComplex {
  public:
    ProductComplex(Graph g1, Graph g2, int level);

    const Graph& factor1() const { return g1_; }
    const Graph& factor2() const { return g2_; }
    int level() const { return n_; }

    int node_count1() const { return nodes1_; }
    int node_count2() const { return nodes2_; }
    int corner_count() const { return nodes1_ * nodes2_; }
    int segment_count1() const { return g1_.edge_count() * n_; }
    int segment_count2() const { return g2_.edge_count() * n_; }
    int cell_count() const { return segment_count1() * segment_count2(); }

    // k = 0..n gives the endpoints and interior nodes along edge e
    int node1(int e, int k) const { return node_of(g1_, e, k); }
    int node2(int e, int k) const { return node_of(g2_, e, k); }
    GraphPoint node_point1(int node) const { return node_point(g1_, node); }
    GraphPoint node_point2(int node) const { return node_point(g2_, node); }

    int corner_index(int node_a, int node_b) const { return node_a * nodes2_ + node_b; }
    int cell_index(int s1, int s2) const { return s1 * segment_count2() + s2; }

    struct CellRef {
        int e1, i1, e2, i2;  // factor edges and subsegment indices
    };
    CellRef cell_ref(int cell) const;
    // corner order P1=(0,0), P2=(1,0), P3=(0,1), P4=(1,1) in cell coordinates
    std::array<int, 4> cell_corners(int cell) const;

  private:
    Graph g1_, g2_;
    int n_;
    int nodes1_, nodes2_;
    int node_of(const Graph& g, int e, int k) const;
    GraphPoint node_point(const Graph& g, int node) const;
};

// Vertical divisor sum(a_C C) + sum(2 b_E E): a_C on corners, b_E on centers.
struct LatticeDivisor {
    std::shared_ptr<const ProductComplex> complex;
    std::vector<Rat> corner;
    std::vector<Rat> center;
};

LatticeDivisor zero_divisor(std::shared_ptr<const ProductComplex> cx);

// Function linear on the center-fan triangulation, values f = c / level.
struct PLFunction {
    std::shared_ptr<const ProductComplex> complex;
    std::vector<Rat> corner;
    std::vector<Rat> center;
    // a, b are level-1 normalized coordinates in [0,1] along edges e1, e2
    Rat eval(int e1, const Rat& a, int e2, const Rat& b) const;
};

PLFunction divisor_to_function(const LatticeDivisor& d);
// Inverse; throws NotTriangulationLinear when f is not fan-linear.
LatticeDivisor function_to_divisor(std::shared_ptr<const ProductComplex> cx,
                                   const std::function<Rat(int, const Rat&, int, const Rat&)>& f);
// Sampling without the linearity check (coefficients level * f at each point).
LatticeDivisor sample_divisor(std::shared_ptr<const ProductComplex> cx,
                              const std::function<Rat(int, const Rat&, int, const Rat&)>& f);

// Base-change pull-back of a level-1 divisor to level n.
LatticeDivisor pullback_subdivide(const LatticeDivisor& d, int n);

// Symmetric trilinear intersection form on centered corner 4-vectors.
Rat local_triple_kernel(const std::array<Rat, 4>& u, const std::array<Rat, 4>& v,
                        const std::array<Rat, 4>& w);

// Triple intersection of three level-n divisors on the same complex.
Rat discrete_triple(const LatticeDivisor& f1, const LatticeDivisor& f2, const LatticeDivisor& f3);

// Function on a product of graphs, smooth per cell (per triangle on cells
// carrying a diagonal), with the diagonal derivative jump supplied directly.
// tri selects the triangle on diagonal cells: 0 for x > y, 1 for x < y.
struct CellFunction {
    Graph g1, g2;
    using Field = std::function<double(int e1, int e2, double x, double y, int tri)>;
    Field f, fx, fy, fxx;
    std::vector<char> diagonal;  // per cell e1 * E2 + e2
    // delta(f)(t) = fx from the x<y side minus fx from the x>y side at (t,t)
    std::function<double(int e, double t)> jump;
};

// Theorem-style triple pairing: sum over cyclic permutations of
// integral(Laplacian_x(f_i) f_jy f_ky) plus the quarter triple-jump term.
double continuous_triple(const CellFunction& f1, const CellFunction& f2, const CellFunction& f3);

// The admissible Green function G(x, y) on the product of g with itself.
CellFunction green_product_function(const Graph& g);

}  // namespace mg
