#pragma once

#include <string>
#include <vector>

#include "mg/graph.hpp"
#include "mg/scalar.hpp"

namespace mg {

enum class PlaceKind { Real, Complex, Nonarchimedean };

struct LocalPlaceData {
    PlaceKind kind = PlaceKind::Nonarchimedean;
    int g = 1;
    long long e = 0;  // toric rank, nonarchimedean only
    int tau = 1;      // Frobenius determinant on the character group
};

struct HodgeNumbers {
    long long h_minus2_1 = 0;
    long long h_minus1_0 = 0;
    bool invalid_for_genus_one = false;  // the formulas assume g >= 2
};

HodgeNumbers hodge_numbers(int g);

// Sign from the theorem-level classification; e = 0 is unramified (+1).
int local_epsilon(const LocalPlaceData& p);

// The lemma-level archimedean formulas i^(6h21+2h10) / i^(4h21+2h10), which
// assign the two case tables to the opposite kinds; kept for comparison.
int local_epsilon_lemma(PlaceKind kind, int g);
bool lemma_agrees(PlaceKind kind, int g);

int global_epsilon(const std::vector<LocalPlaceData>& places);

long long toric_rank_from_graph(const Graph& g);

// log of Gamma_C(s+2)^h21 * Gamma_C(s+1)^h10 with Gamma_C(s) = 2 (2pi)^-s Gamma(s);
// throws PoleAt when a Gamma argument hits a nonpositive integer.
double log_archimedean_L_factor(int g, double s);
double archimedean_L_factor(int g, double s);

std::string to_string(PlaceKind k);

}  // namespace mg
