#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <string>

namespace prefixcomp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (maintained by cpp_rational's canonicalization).
using Rational = boost::multiprecision::cpp_rational;

/// 2^-len as an exact rational.
inline Rational kraft_weight(int len) {
    Rational r(1);
    r /= BigInt(1) << len;
    return r;
}

/// Formats as "p/q" in lowest terms, or "p" when the value is an integer.
std::string format_rational(const Rational& r);

/// Parses "p", "-p", "p/q". Returns nullopt on malformed input or q <= 0.
std::optional<Rational> parse_rational(const std::string& s);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// True iff r == 2^-k for some integer k >= 0.
bool is_power_of_half(const Rational& r);

}  // namespace prefixcomp
