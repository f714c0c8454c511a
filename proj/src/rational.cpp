#include "prefixcomp/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace prefixcomp {

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp >= 0) {
        r *= BigInt(1) << exp;
    } else {
        r /= BigInt(1) << -exp;
    }
    return r;
}

bool is_power_of_half(const Rational& r) {
    if (r <= 0 || r > 1) return false;
    if (numerator(r) != 1) return false;
    const BigInt& d = denominator(r);
    return (d & (d - 1)) == 0;
}

}  // namespace prefixcomp
