#include "prefixcomp/kraft.hpp"

#include <algorithm>
#include <numeric>

#include "prefixcomp/families.hpp"
#include "prefixcomp/oracle.hpp"

namespace prefixcomp {

namespace {

// Extracts a subset of candidates with Kraft sum exactly 2^-k. Greedy by
// descending weight: the residual target stays a multiple of the current
// weight, so it succeeds whenever the candidates' total covers the target.
SymbolSet extract_kraft_subset(const LengthProfile& p, SymbolSet candidates, int k) {
    std::vector<int> idx = candidates.indices();
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return p.length(a) < p.length(b); });
    Rational target = kraft_weight(k);
    SymbolSet out;
    for (int u : idx) {
        if (p.length(u) < k) continue;
        Rational w = kraft_weight(p.length(u));
        if (w <= target) {
            out.add(u);
            target -= w;
        }
        if (target == 0) break;
    }
    if (target != 0)
        throw DomainError(Errc::PreconditionViolated, "no subset realizes the target bit");
    return out;
}

}  // namespace

KraftPartition huffman_kraft_partition(const LengthProfile& p, SymbolSet a) {
    SymbolSet full = SymbolSet::full(p.size());
    if (a.empty() || a == full || !a.subset_of(full))
        throw DomainError(Errc::BadSubset, "requires a nonempty proper subset");

    KraftPartition out;
    out.base_set = a;
    SymbolSet remaining = a;
    Rational k_rem = kraft_sum(p, remaining);
    while (k_rem != 0) {
        // Lowest-order set bit of K(remaining): its reduced denominator is
        // 2^k with an odd numerator.
        int k = static_cast<int>(boost::multiprecision::msb(denominator(k_rem)));
        SymbolSet part = extract_kraft_subset(p, remaining, k);
        if (static_cast<int>(out.parts.size()) < k) out.parts.resize(k);
        out.parts[k - 1] = part;
        remaining = remaining.minus(part);
        k_rem -= kraft_weight(k);
    }
    return out;
}

SymbolSet kraft_completion(const LengthProfile& p, SymbolSet universe, SymbolSet a, int j) {
    SymbolSet full = SymbolSet::full(p.size());
    if (!universe.subset_of(full) || !a.subset_of(universe))
        throw DomainError(Errc::BadSubset, "requires a within the universe");
    if (j < 0)
        throw DomainError(Errc::PreconditionViolated, "j must be nonnegative");
    Rational k_universe = kraft_sum(p, universe);
    Rational step = kraft_weight(j);
    Rational multiple = k_universe / step;
    if (denominator(multiple) != 1)
        throw DomainError(Errc::PreconditionViolated, "K(universe) must be a multiple of 2^-j");
    Rational k_a = kraft_sum(p, a);
    if (k_a <= 0 || k_a >= step)
        throw DomainError(Errc::PreconditionViolated, "requires 0 < K(a) < 2^-j");

    // K(universe - a) = (M - 1) 2^-j + (2^-j - K(a)); the bits below 2^-j are
    // exactly the expansion of the deficit, so their parts complete a.
    KraftPartition partition = huffman_kraft_partition(p, universe.minus(a));
    SymbolSet b;
    for (int i = j; i < static_cast<int>(partition.parts.size()); ++i)
        b = b.united(partition.parts[i]);
    return b;
}

LengthProfile construct_dominating_profile(const LengthProfile& p, SymbolSet u, SymbolSet v) {
    SymbolSet full = SymbolSet::full(p.size());
    if (u.empty() || v.empty() || !u.subset_of(full) || !v.subset_of(full) ||
        !u.disjoint_with(v))
        throw DomainError(Errc::BadSubset, "requires nonempty disjoint subsets");
    Rational ku = kraft_sum(p, u);
    Rational kv = kraft_sum(p, v);
    if (ku >= kv)
        throw DomainError(Errc::KraftOrderViolated, "requires K(u) < K(v)");

    int k = 1;
    while (ku > (1 - kraft_weight(k)) * kv) ++k;

    std::vector<int> lens = p.lengths();
    for (int i : u.indices()) --lens[i];
    for (int i : v.indices()) lens[i] += k;
    return LengthProfile(std::move(lens));
}

OptimalityVerdict subset_certificate(const Source& s, const LengthProfile& p, int max_n) {
    if (s.size() != p.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    const int n = s.size();
    if (n > max_n)
        throw DomainError(Errc::TooLarge, "subset search guarded at n <= " +
                                              std::to_string(max_n));
    if (!is_complete(p) || !is_strongly_monotone(s, p, max_n))
        throw DomainError(Errc::NotOptimalProfile,
                          "exactness requires an expected-length-optimal complete profile");

    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<Rational> kraft(total), prob(total);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int low = __builtin_ctzll(mask);
        std::uint64_t rest = mask & (mask - 1);
        kraft[mask] = kraft[rest] + kraft_weight(p.length(low));
        prob[mask] = prob[rest] + s.probability(low);
    }

    std::vector<std::uint64_t> order;
    order.reserve(total - 1);
    for (std::uint64_t mask = 1; mask < total; ++mask) order.push_back(mask);
    std::stable_sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });

    for (std::uint64_t u : order) {
        std::uint64_t comp = (total - 1) & ~u;
        for (std::uint64_t v = comp; v; v = (v - 1) & comp) {
            if (kraft[u] < kraft[v] && prob[u] > prob[v])
                return {OptimalityStatus::NotOptimal,
                        Certificate(SubsetPairCertificate{{u}, {v}}),
                        VerdictMethod::SubsetExact};
        }
    }
    return {OptimalityStatus::Optimal, std::nullopt, VerdictMethod::SubsetExact};
}

OptimalityVerdict leaf_condition(const Source&, const HuffmanTree& t) {
    if (auto hit = scan_leaf_condition(t))
        return {OptimalityStatus::NotOptimal,
                Certificate(LeafTripleCertificate{hit->y, hit->y_sib, hit->z}),
                VerdictMethod::LeafCondition};
    return {OptimalityStatus::Unknown, std::nullopt, VerdictMethod::LeafCondition};
}

namespace {

void require_optimal_profile(const Source& s, const LengthProfile& p) {
    if (s.size() != p.size())
        throw DomainError(Errc::SizeMismatch, "source and profile sizes differ");
    HuffmanResult h = huffman(s);
    if (!is_complete(p) || expected_length(s, p) != expected_length(s, h.profile))
        throw DomainError(Errc::NotOptimalProfile,
                          "method applies to expected-length-optimal profiles");
}

OptimalityVerdict hexahedron_verdict(const Source& s, const LengthProfile& p) {
    if (s.size() != 4)
        throw DomainError(Errc::WrongSize, "hexahedron classification requires n = 4");
    require_optimal_profile(s, p);

    std::vector<int> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return s.probability(a) > s.probability(b); });
    std::vector<Rational> sorted;
    for (int i : order) sorted.push_back(s.probability(i));
    N4Class cls = classify_n4(Source(sorted, s.mode()));
    if (cls == N4Class::Optimal)
        return {OptimalityStatus::Optimal, std::nullopt, VerdictMethod::Hexahedron};
    if (cls == N4Class::Boundary)
        return {OptimalityStatus::Unknown, std::nullopt, VerdictMethod::Hexahedron};

    // Interior of the non-optimal region: p has lengths {1, 2, 3, 3}. Move
    // the length-1 symbol to 3, the length-2 symbol to 1, and the heavier
    // length-3 symbol to 2; it wins the latter two against the former.
    int one = -1, two = -1, heavy3 = -1;
    for (int i = 0; i < 4; ++i) {
        if (p.length(i) == 1) one = i;
        if (p.length(i) == 2) two = i;
        if (p.length(i) == 3 && (heavy3 < 0 || s.probability(i) > s.probability(heavy3)))
            heavy3 = i;
    }
    std::vector<int> lens = p.lengths();
    lens[one] = 3;
    lens[two] = 1;
    lens[heavy3] = 2;
    return {OptimalityStatus::NotOptimal,
            Certificate(DominatingProfileCertificate{LengthProfile(std::move(lens))}),
            VerdictMethod::Hexahedron};
}

}  // namespace

OptimalityVerdict is_competitively_optimal(const Source& s, const LengthProfile& p,
                                           VerdictMethod m) {
    switch (m) {
        case VerdictMethod::SubsetExact:
            return subset_certificate(s, p);
        case VerdictMethod::LeafCondition: {
            HuffmanResult h = huffman(s);
            return leaf_condition(s, p == h.profile ? h.tree : canonical_tree(s, p));
        }
        case VerdictMethod::BruteForce:
            return brute_force_is_optimal(s, p);
        case VerdictMethod::Hexahedron:
            return hexahedron_verdict(s, p);
        case VerdictMethod::SmallN:
            require_optimal_profile(s, p);
            return classify_small(s);
    }
    throw DomainError(Errc::BadConfig, "unknown verdict method");
}

ExistenceResult exists_competitively_optimal_code(const Source& s, int max_n) {
    for (const LengthProfile& p : all_optimal_profiles(s, max_n)) {
        if (subset_certificate(s, p, max_n).status == OptimalityStatus::Optimal)
            return {true, p};
    }
    return {false, std::nullopt};
}

}  // namespace prefixcomp
