#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mg/admissible.hpp"
#include "mg/graph.hpp"

namespace mg {

enum class Verdict { Holds, Equality, Fails };

std::string to_string(Verdict v);

struct BoundReport {
    std::string graph_id;
    std::string bound;  // "phi", "lambda", "epsilon-lower", "epsilon-upper", ...
    Rat left, right, slack;
    Verdict verdict = Verdict::Holds;
    Rat c_used;
    bool c_is_default = true;
    // Negative phi-slack at the default (elementary-only) constant on a
    // non-elementary graph is a flag, not a conjecture violation.
    bool flagged = false;
};

// Does this report represent a genuine violation for exit-code purposes?
bool is_violation(const BoundReport& r);

// phi(G) >= c * l_0 + sum_{i>0} 2i(g-i)/g * l_i; default c = (g-1)/(6g)
BoundReport check_phi_bound(const Graph& g, std::optional<Rat> c = std::nullopt);
BoundReport check_phi_bound(const Graph& g, const InvariantBundle& b,
                            std::optional<Rat> c = std::nullopt);

// lambda(G) >= g/(8g+4) * l_0 + sum_{i>0} i(g-i)/(2g+1) * l_i
BoundReport check_lambda_bound(const Graph& g);
BoundReport check_lambda_bound(const Graph& g, const InvariantBundle& b);

struct TwoSidedReport {
    BoundReport lower, upper;
};

// (g-1)/(g+1)(l - 4g tau) <= eps <= 12g tau - (1+c)l on 2-edge-connected graphs
TwoSidedReport check_epsilon_two_sided(const Graph& g, std::optional<Rat> c = std::nullopt);

// -(2g-1)/4 l <= phi <= 3g/2 l; must hold for every polarized graph
TwoSidedReport check_trivial_bounds(const Graph& g);

struct FamilySpec {
    std::string name;  // circles, chains-of-circles, banana, theta-variants,
                       // random-polarized, wheel, complete
    int count = 1;
    std::uint64_t seed = 0;
    std::map<std::string, long long> params;
};

std::vector<Graph> generate_family(const FamilySpec& spec);  // throws InvalidSpec

// Random successive pointed sums of small blocks, for additivity testing.
Graph random_pointed_sum(std::uint64_t seed);
// Random connected polarized multigraph with valid canonical divisor.
Graph random_polarized(std::uint64_t seed, int n_vertices, int n_edges, long long q_budget);

}  // namespace mg
