#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "prefixcomp/core.hpp"
#include "prefixcomp/verdict.hpp"

namespace prefixcomp {

/// Sorted length multisets of complete codes with n leaves and lengths
/// bounded by max_len (a complete binary tree with n leaves has depth
/// at most n - 1, so max_len = n - 1 loses nothing).
std::vector<std::vector<int>> complete_length_multisets(int n, int max_len);

/// Streams every complete profile: each multiset in every distinct
/// assignment of lengths to symbols. Deterministic order, no duplicates.
void for_each_complete_profile(int n, int max_len,
                               const std::function<void(const LengthProfile&)>& fn,
                               int max_n = 10);

std::vector<LengthProfile> enumerate_complete_profiles(int n, int max_len, int max_n = 10);

/// Ground-truth competitive optimality by exhausting all complete
/// challengers. NotOptimal carries the maximum-advantage challenger.
OptimalityVerdict brute_force_is_optimal(const Source& s, const LengthProfile& p,
                                         int max_n = 10);

/// Maximum advantage over p among all complete profiles, with one argmax
/// (lexicographically smallest on ties).
std::pair<Rational, LengthProfile> max_advantage_over(const Source& s,
                                                      const LengthProfile& p,
                                                      int max_n = 10);

}  // namespace prefixcomp
