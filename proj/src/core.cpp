#include "prefixcomp/core.hpp"

#include <cmath>
#include <utility>

namespace prefixcomp {

std::vector<int> SymbolSet::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Source::Source(std::vector<Rational> probs, NumericMode mode,
               std::vector<std::string> labels)
    : probs_(std::move(probs)), mode_(mode), labels_(std::move(labels)) {
    if (probs_.empty())
        throw DomainError(Errc::BadTotal, "source must have at least one symbol");
    Rational total(0);
    for (const auto& p : probs_) {
        if (p <= 0)
            throw DomainError(Errc::NonPositiveProbability,
                              "probability " + format_rational(p));
        total += p;
    }
    if (mode_.is_exact()) {
        if (total != 1)
            throw DomainError(Errc::BadTotal,
                              "probabilities sum to " + format_rational(total));
    } else {
        if (std::abs(to_double(total) - 1.0) > mode_.epsilon)
            throw DomainError(Errc::BadTotal,
                              "probabilities sum to " + std::to_string(to_double(total)));
    }
    if (!labels_.empty() && labels_.size() != probs_.size())
        throw DomainError(Errc::SizeMismatch, "label count != symbol count");
}

LengthProfile::LengthProfile(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty())
        throw DomainError(Errc::SizeMismatch, "empty length profile");
    Rational k(0);
    for (int l : lengths_) {
        if (l < 0 || (l == 0 && lengths_.size() > 1))
            throw DomainError(Errc::PreconditionViolated,
                              "length " + std::to_string(l) + " invalid for n=" +
                                  std::to_string(lengths_.size()));
        k += kraft_weight(l);
    }
    if (k > 1)
        throw DomainError(Errc::PreconditionViolated,
                          "Kraft sum " + format_rational(k) + " exceeds 1");
}

Source make_source(const std::vector<Rational>& probs, NumericMode mode,
                   std::vector<std::string> labels) {
    return Source(probs, mode, std::move(labels));
}

Source make_source(const std::vector<double>& probs, NumericMode mode,
                   std::vector<std::string> labels) {
    std::vector<Rational> rs;
    rs.reserve(probs.size());
    for (double p : probs) rs.push_back(rational_from_double(p));
    return Source(std::move(rs), mode, std::move(labels));
}

bool is_dyadic(const Source& s) {
    if (s.mode().is_exact()) {
        for (const auto& p : s.probabilities())
            if (!is_power_of_half(p)) return false;
        return true;
    }
    for (const auto& p : s.probabilities()) {
        double v = to_double(p);
        double k = std::round(std::log2(1.0 / v));
        if (k < 0 || std::abs(v - std::ldexp(1.0, -static_cast<int>(k))) > s.mode().epsilon)
            return false;
    }
    return true;
}

Rational kraft_sum(const LengthProfile& p, SymbolSet a) {
    Rational k(0);
    for (int i = 0; i < p.size(); ++i)
        if (a.contains(i)) k += kraft_weight(p.length(i));
    return k;
}

Rational kraft_sum(const LengthProfile& p) {
    return kraft_sum(p, SymbolSet::full(p.size()));
}

Rational probability(const Source& s, SymbolSet a) {
    Rational total(0);
    for (int i = 0; i < s.size(); ++i)
        if (a.contains(i)) total += s.probability(i);
    return total;
}

double entropy(const Source& s) {
    double h = 0.0;
    for (const auto& p : s.probabilities()) {
        double v = to_double(p);
        h -= v * std::log2(v);
    }
    return h;
}

}  // namespace prefixcomp
