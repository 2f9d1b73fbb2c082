#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mg {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Domain errors raised by the math layers; the CLI maps them to exit code 1
// when caused by input and 2 when they indicate an internal inconsistency.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long long n, long long d = 1) {
    if (d == 0) throw DomainError("zero denominator");
    return Rat(Int(n), Int(d));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite length");
    int exp = 0;
    double m = std::frexp(x, &exp);
    // 53 doublings make the mantissa integral
    Int num(static_cast<long long>(std::ldexp(m, 53)));
    exp -= 53;
    Rat r(num);
    if (exp > 0) r *= Rat(Int(1) << exp);
    else if (exp < 0) r /= Rat(Int(1) << (-exp));
    return r;
}

// Accepts "p", "-p", "p/q". Returns nullopt on malformed input or q <= 0.
inline std::optional<Rat> parse_rational(std::string_view s) {
    auto is_int = [](std::string_view t, bool allow_sign) {
        if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(s, true)) return std::nullopt;
            return Rat(Int(std::string(s)));
        }
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num, true) || !is_int(den, false)) return std::nullopt;
        Int d{std::string(den)};
        if (d <= 0) return std::nullopt;
        return Rat(Int(std::string(num)), d);
    } catch (...) {
        return std::nullopt;
    }
}

inline std::string to_string(const Rat& r) {
    const Int& n = numerator(r);
    const Int& d = denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace mg
