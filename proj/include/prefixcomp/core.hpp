#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prefixcomp/errors.hpp"
#include "prefixcomp/rational.hpp"

namespace prefixcomp {

/// Exact mode does all arithmetic in arbitrary-precision rationals.
/// Float mode admits inputs known only to double precision; epsilon is the
/// tolerance for sum-to-one validation and near-dyadic tests.
struct NumericMode {
    enum class Kind { Exact, Float } kind = Kind::Exact;
    double epsilon = 0.0;

    static NumericMode exact() { return {Kind::Exact, 0.0}; }
    static NumericMode floating(double eps = 1e-12) { return {Kind::Float, eps}; }
    bool is_exact() const { return kind == Kind::Exact; }
};

/// Subset of symbol indices as a bitmask. Alphabets are capped at 64 symbols
/// wherever subsets are involved; the simulation path never builds these.
struct SymbolSet {
    std::uint64_t bits = 0;

    static SymbolSet full(int n) {
        return {n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
    }
    static SymbolSet single(int i) { return {std::uint64_t{1} << i}; }
    static SymbolSet of(std::initializer_list<int> idx) {
        SymbolSet s;
        for (int i : idx) s.add(i);
        return s;
    }

    bool contains(int i) const { return (bits >> i) & 1; }
    void add(int i) { bits |= std::uint64_t{1} << i; }
    void remove(int i) { bits &= ~(std::uint64_t{1} << i); }
    bool empty() const { return bits == 0; }
    int count() const { return __builtin_popcountll(bits); }
    bool disjoint_with(SymbolSet o) const { return (bits & o.bits) == 0; }
    bool subset_of(SymbolSet o) const { return (bits & ~o.bits) == 0; }
    SymbolSet minus(SymbolSet o) const { return {bits & ~o.bits}; }
    SymbolSet united(SymbolSet o) const { return {bits | o.bits}; }

    std::vector<int> indices() const;

    friend bool operator==(SymbolSet, SymbolSet) = default;
};

/// A validated probability distribution over n >= 1 symbols, in input order.
/// Float-mode probabilities are held exactly as the dyadic rationals the
/// doubles denote; the mode only changes validation and reporting tolerances.
class Source {
public:
    Source(std::vector<Rational> probs, NumericMode mode,
           std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(probs_.size()); }
    const std::vector<Rational>& probabilities() const { return probs_; }
    const Rational& probability(int i) const { return probs_[i]; }
    const NumericMode& mode() const { return mode_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<Rational> probs_;
    NumericMode mode_;
    std::vector<std::string> labels_;
};

/// Codeword lengths per symbol, aligned with Source order. The canonical
/// representation of a prefix code up to length equivalence.
class LengthProfile {
public:
    explicit LengthProfile(std::vector<int> lengths);

    int size() const { return static_cast<int>(lengths_.size()); }
    int length(int i) const { return lengths_[i]; }
    const std::vector<int>& lengths() const { return lengths_; }

    friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
    friend auto operator<=>(const LengthProfile& a, const LengthProfile& b) {
        return a.lengths_ <=> b.lengths_;
    }

private:
    std::vector<int> lengths_;
};

Source make_source(const std::vector<Rational>& probs, NumericMode mode,
                   std::vector<std::string> labels = {});
Source make_source(const std::vector<double>& probs, NumericMode mode,
                   std::vector<std::string> labels = {});

/// True iff every probability is exactly 2^-k (within epsilon in Float mode).
bool is_dyadic(const Source& s);

/// K(a) = sum of 2^-l over members of a, exact.
Rational kraft_sum(const LengthProfile& p, SymbolSet a);
Rational kraft_sum(const LengthProfile& p);

/// P(a) = sum of member probabilities, exact.
Rational probability(const Source& s, SymbolSet a);

/// Shannon entropy in bits, evaluated in floating point.
double entropy(const Source& s);

}  // namespace prefixcomp
