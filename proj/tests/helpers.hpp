#pragma once

// Shared generators for the test suites. Random sources are exact rationals
// v_i / sum(v) with v_i drawn from a keyed counter RNG, so every suite is
// reproducible in isolation.

#include <algorithm>
#include <vector>

#include "prefixcomp/core.hpp"
#include "prefixcomp/oracle.hpp"
#include "prefixcomp/simulate.hpp"

inline prefixcomp::Source random_exact_source(std::uint64_t seed, std::uint64_t tag,
                                              int n, int scale = 1000) {
    using namespace prefixcomp;
    RngStream rng = RngStream::keyed(seed, static_cast<std::uint64_t>(n), tag);
    std::vector<Rational> w(n);
    Rational total(0);
    for (auto& r : w) {
        r = Rational(1 + static_cast<int>(rng.next_u64() % scale));
        total += r;
    }
    for (auto& r : w) r /= total;
    return make_source(w, NumericMode::exact());
}

// Dyadic source built from a complete length multiset of size n, with the
// lengths assigned to symbols in a key-dependent rotation.
inline prefixcomp::Source random_dyadic_source(std::uint64_t seed, std::uint64_t tag,
                                               int n) {
    using namespace prefixcomp;
    RngStream rng = RngStream::keyed(seed, static_cast<std::uint64_t>(n), tag);
    auto multisets = complete_length_multisets(n, n - 1);
    std::vector<int> lens = multisets[rng.next_u64() % multisets.size()];
    std::rotate(lens.begin(), lens.begin() + rng.next_u64() % lens.size(), lens.end());
    std::vector<Rational> probs;
    probs.reserve(n);
    for (int l : lens) probs.push_back(kraft_weight(l));
    return make_source(probs, NumericMode::exact());
}
