#pragma once

#include <vector>

#include "prefixcomp/coding.hpp"
#include "prefixcomp/verdict.hpp"

namespace prefixcomp {

/// Disjoint subsets A_1, A_2, ... of base_set whose Kraft sums realize the
/// bits of K(base_set)'s binary expansion: K(parts[i-1]) = b_i * 2^-i.
struct KraftPartition {
    std::vector<SymbolSet> parts;  // parts[i] corresponds to bit position i+1
    SymbolSet base_set;
};

/// Builds a Kraft partition of a nonempty proper subset of the alphabet.
KraftPartition huffman_kraft_partition(const LengthProfile& p, SymbolSet a);

/// Returns B subset of universe - a with K(a union B) = 2^-j.
/// Requires K(universe) a multiple of 2^-j and 0 < K(a) < 2^-j.
SymbolSet kraft_completion(const LengthProfile& p, SymbolSet universe, SymbolSet a, int j);

/// Builds a profile winning exactly on u and losing exactly on v against p,
/// by shortening u by one bit and lengthening v by the smallest workable k.
LengthProfile construct_dominating_profile(const LengthProfile& p, SymbolSet u, SymbolSet v);

/// Exact competitive-optimality decision for an expected-length-optimal
/// complete profile, by searching disjoint subset pairs with K(U) < K(V) and
/// P(U) > P(V). 3^n assignments; guarded.
OptimalityVerdict subset_certificate(const Source& s, const LengthProfile& p,
                                     int max_n = 16);

/// Sufficient condition check at the tree's root sibling pair; never
/// returns Optimal.
OptimalityVerdict leaf_condition(const Source& s, const HuffmanTree& t);

/// Dispatches to the named method. Hexahedron and SmallN accept only the
/// sizes their closed forms cover.
OptimalityVerdict is_competitively_optimal(const Source& s, const LengthProfile& p,
                                           VerdictMethod m);

struct ExistenceResult {
    bool exists = false;
    std::optional<LengthProfile> witness;
};

/// Tests every expected-length-optimal profile; a competitively optimal code
/// exists iff one of them passes the subset certificate.
ExistenceResult exists_competitively_optimal_code(const Source& s, int max_n = 12);

}  // namespace prefixcomp
