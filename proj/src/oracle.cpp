#include "prefixcomp/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prefixcomp/competition.hpp"

namespace prefixcomp {

namespace {

using Multiset = std::vector<int>;  // sorted ascending

// Depth multisets of complete binary trees with n leaves, depth <= cap.
const std::set<Multiset>& multisets_memo(int n, int cap) {
    static std::map<std::pair<int, int>, std::set<Multiset>> memo;
    auto key = std::make_pair(n, cap);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::set<Multiset> result;
    if (n == 1) {
        result.insert({0});
    } else if (cap >= 1) {
        for (int left = 1; left <= n / 2; ++left) {
            for (const auto& a : multisets_memo(left, cap - 1)) {
                for (const auto& b : multisets_memo(n - left, cap - 1)) {
                    Multiset merged;
                    merged.reserve(n);
                    for (int d : a) merged.push_back(d + 1);
                    for (int d : b) merged.push_back(d + 1);
                    std::sort(merged.begin(), merged.end());
                    result.insert(std::move(merged));
                }
            }
        }
    }
    return memo.emplace(key, std::move(result)).first->second;
}

void check_guard(int n, int max_n) {
    if (n < 1 || n > max_n)
        throw DomainError(Errc::TooLarge, "enumeration guarded at 1 <= n <= " +
                                              std::to_string(max_n));
}

}  // namespace

std::vector<std::vector<int>> complete_length_multisets(int n, int max_len) {
    const auto& set = multisets_memo(n, max_len);
    return {set.begin(), set.end()};
}

void for_each_complete_profile(int n, int max_len,
                               const std::function<void(const LengthProfile&)>& fn,
                               int max_n) {
    check_guard(n, max_n);
    for (const auto& multiset : multisets_memo(n, max_len)) {
        Multiset perm = multiset;  // already sorted: next_permutation covers
        do {                       // each distinct assignment exactly once
            fn(LengthProfile(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

std::vector<LengthProfile> enumerate_complete_profiles(int n, int max_len, int max_n) {
    std::vector<LengthProfile> out;
    for_each_complete_profile(n, max_len, [&](const LengthProfile& p) { out.push_back(p); },
                              max_n);
    return out;
}

std::pair<Rational, LengthProfile> max_advantage_over(const Source& s,
                                                      const LengthProfile& p,
                                                      int max_n) {
    check_guard(s.size(), max_n);
    Rational best(-2);
    std::optional<LengthProfile> arg;
    for_each_complete_profile(s.size(), s.size() - 1, [&](const LengthProfile& c) {
        Rational adv = compete(s, c, p).advantage;
        if (adv > best || (adv == best && (!arg || c < *arg))) {
            best = adv;
            arg = c;
        }
    });
    return {best, *arg};
}

OptimalityVerdict brute_force_is_optimal(const Source& s, const LengthProfile& p,
                                         int max_n) {
    auto [best, challenger] = max_advantage_over(s, p, max_n);
    if (best > 0)
        return {OptimalityStatus::NotOptimal,
                Certificate(DominatingProfileCertificate{challenger}),
                VerdictMethod::BruteForce};
    return {OptimalityStatus::Optimal, std::nullopt, VerdictMethod::BruteForce};
}

}  // namespace prefixcomp
