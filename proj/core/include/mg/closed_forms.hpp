#pragma once

#include "mg/admissible.hpp"
#include "mg/graph.hpp"

namespace mg {

// Segment of length ell with end weights (i, g-i); requires 1 <= i <= g/2.
InvariantBundle bridge_bundle(int g, int i, const Rat& ell);

// One vertex of weight g-1 carrying a loop of length ell; g >= 1.
InvariantBundle single_vertex_circle_bundle(int g, const Rat& ell);

struct CircleMark {
    Rat position;  // arc position in [0, ell)
    long long q;   // >= 1
};

// Circle of circumference ell with marked points; sum of marks must be g-1.
InvariantBundle circle_bundle(int g, const std::vector<CircleMark>& marks, const Rat& ell);

// Explicit graphs matching the closed forms, for cross-checking.
GraphSpec bridge_graph(int g, int i, const Rat& ell);
GraphSpec single_vertex_circle_graph(int g, const Rat& ell);
GraphSpec circle_graph(int g, const std::vector<CircleMark>& marks, const Rat& ell);

// Sum of per-component bundles from the pointed-sum decomposition; closed
// forms are used for bridge and single-vertex-circle components.
InvariantBundle additive_bundle(const Graph& g);

}  // namespace mg
