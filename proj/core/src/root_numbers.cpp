#include "mg/root_numbers.hpp"

#include <cmath>

namespace mg {

HodgeNumbers hodge_numbers(int g) {
    if (g < 1) throw DomainError("InvalidGenus");
    HodgeNumbers h;
    long long gl = g;
    h.h_minus2_1 = gl * (gl - 1) * (gl - 2) / 6;
    h.h_minus1_0 = gl * (gl - 2) * (gl + 1) / 2;
    h.invalid_for_genus_one = (g == 1);
    return h;
}

namespace {

int sign_pow(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

int i_pow_sign(long long exponent) {
    // only even exponents arise here, so i^exponent is real
    long long m = ((exponent % 4) + 4) % 4;
    if (m % 2 != 0) throw DomainError("internal: odd i-power exponent");
    return m == 0 ? 1 : -1;
}

}  // namespace

int local_epsilon(const LocalPlaceData& p) {
    long long g = p.g;
    if (g < 1) throw DomainError("InvalidGenus");
    switch (p.kind) {
        case PlaceKind::Real:
            return sign_pow(g * (g - 1) / 2);
        case PlaceKind::Complex:
            return sign_pow(g * (g + 1) * (g + 2) / 6);
        case PlaceKind::Nonarchimedean: {
            long long e = p.e;
            if (e < 0) throw DomainError("InvalidToricRank");
            if (p.tau != 1 && p.tau != -1) throw DomainError("InvalidTau");
            if (e == 0) return 1;  // unramified: trivial character group
            long long minus_one_exp = e * (e - 1) * (e - 2) / 6 + g * e;
            long long tau_exp = (e - 1) * (e - 2) / 2 + g;
            int s = sign_pow(minus_one_exp);
            if (p.tau == -1 && tau_exp % 2 != 0) s = -s;
            return s;
        }
    }
    throw DomainError("InvalidPlaceKind");
}

int local_epsilon_lemma(PlaceKind kind, int g) {
    HodgeNumbers h = hodge_numbers(g);
    if (kind == PlaceKind::Complex) return i_pow_sign(6 * h.h_minus2_1 + 2 * h.h_minus1_0);
    if (kind == PlaceKind::Real) return i_pow_sign(4 * h.h_minus2_1 + 2 * h.h_minus1_0);
    throw DomainError("InvalidPlaceKind: lemma formula is archimedean only");
}

bool lemma_agrees(PlaceKind kind, int g) {
    LocalPlaceData p;
    p.kind = kind;
    p.g = g;
    return local_epsilon_lemma(kind, g) == local_epsilon(p);
}

int global_epsilon(const std::vector<LocalPlaceData>& places) {
    if (places.empty()) throw DomainError("EmptyPlaceList");
    int s = 1;
    for (const auto& p : places) s *= local_epsilon(p);
    return s;
}

long long toric_rank_from_graph(const Graph& g) { return g.betti(); }

namespace {

// log Gamma_C(s) = log 2 - s log(2 pi) + log Gamma(s)
double log_gamma_c(double s) {
    if (s <= 0 && s == std::floor(s)) throw DomainError("PoleAt");
    return std::log(2.0) - s * std::log(2.0 * M_PI) + std::lgamma(s);
}

}  // namespace

double log_archimedean_L_factor(int g, double s) {
    if (g < 2) throw DomainError("InvalidGenus: L-factor needs g >= 2");
    HodgeNumbers h = hodge_numbers(g);
    double total = 0;
    if (h.h_minus2_1 != 0) total += h.h_minus2_1 * log_gamma_c(s + 2);
    if (h.h_minus1_0 != 0) total += h.h_minus1_0 * log_gamma_c(s + 1);
    return total;
}

double archimedean_L_factor(int g, double s) { return std::exp(log_archimedean_L_factor(g, s)); }

std::string to_string(PlaceKind k) {
    switch (k) {
        case PlaceKind::Real:
            return "real";
        case PlaceKind::Complex:
            return "complex";
        case PlaceKind::Nonarchimedean:
            return "nonarch";
    }
    return "?";
}

}  // namespace mg
