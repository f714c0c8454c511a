#pragma once

#include <set>
#include <utility>
#include <vector>

#include "prefixcomp/code_tree.hpp"
#include "prefixcomp/core.hpp"

namespace prefixcomp {

using HuffmanTree = CodeTree<Rational>;

/// Canonical is deterministic; EnumerateAll explores every tie branch and is
/// exposed through huffman_profiles_all.
enum class TieBreak { Canonical, EnumerateAll };

struct HuffmanResult {
    HuffmanTree tree;
    LengthProfile profile;
};

/// Canonical Huffman code for the source (deterministic tie-break).
HuffmanResult huffman(const Source& s, TieBreak t = TieBreak::Canonical);

/// Every length profile reachable by some Huffman merge order (distinct
/// profiles only). Exponential in ties; guarded at max_n symbols.
std::set<LengthProfile> huffman_profiles_all(const Source& s, int max_n = 12);

/// Every complete profile achieving the minimum expected length.
std::set<LengthProfile> all_optimal_profiles(const Source& s, int max_n = 12);

/// l(y) = ceil(log2 1/P(y)), computed exactly by repeated halving.
LengthProfile shannon_fano(const Source& s);

/// Exact weighted codeword length.
Rational expected_length(const Source& s, const LengthProfile& p);

/// True iff the Kraft sum equals 1.
bool is_complete(const LengthProfile& p);

/// Monotonicity over the canonical tree realization of the profile: every
/// node at smaller depth has probability >= every node at greater depth.
bool is_monotone(const Source& s, const LengthProfile& p);

/// No subset pair (A, B) with power-of-two Kraft sums K(A) > K(B) has
/// P(A) < P(B). Subset enumeration; guarded.
bool is_strongly_monotone(const Source& s, const LengthProfile& p, int max_n = 16);

/// Canonical tree realization of a profile: symbols stably sorted by length,
/// codewords assigned in lexicographic order.
HuffmanTree canonical_tree(const Source& s, const LengthProfile& p);

}  // namespace prefixcomp
