#pragma once

#include <array>
#include <string>

#include "prefixcomp/core.hpp"
#include "prefixcomp/verdict.hpp"

namespace prefixcomp {

/// A constructed source together with its reference profile, a challenger,
/// and the closed-form predictions the construction guarantees.
struct FamilyInstance {
    Source source;
    LengthProfile reference_profile;   // Huffman or Shannon-Fano, per family
    LengthProfile challenger_profile;
    Rational predicted_advantage;
    Rational predicted_avg_length_gap;  // challenger vs reference, absolute
};

/// Sources whose Huffman codes can be beaten by margins approaching 1/3:
/// (1/3+eps, 1/3, 1/3-2eps, geometric tail). Advantage 1/3 - 3eps,
/// average-length gap 4eps.
FamilyInstance family_one_third(int n, const Rational& eps);

/// Sources where a challenger beats Shannon-Fano by at least 1 - 2^{-n+2}:
/// p_k = 2^-k - eps for k < n, remainder on p_n. Requires 0 < eps < 4^-n.
FamilyInstance family_sf_gap(int n, const Rational& eps);

/// Huffman codes are competitively optimal for every source of size <= 3.
OptimalityVerdict classify_small(const Source& s);

enum class N4Class { Optimal, NotOptimal, Boundary };

/// Closed-form classification for size-4 sources with p1 >= p2 >= p3 >= p4:
/// NotOptimal iff p3 + p4 < p1 and p2 + p3 > p1; Boundary when a deciding
/// inequality holds with equality. Exact rationals only.
N4Class classify_n4(const Source& s);

struct N4Volumes {
    Rational tetrahedron1;   // apex (1/3, 1/3, 1/6)
    Rational tetrahedron2;   // apex (1/2, 1/4, 1/4)
    Rational reference_cell; // sorted-simplex cell
};

/// Exact tetrahedra volumes behind the 1/3 probability, via 4x4 determinants.
N4Volumes n4_hexahedron_volumes();

/// Probability a flat-Dirichlet size-4 source has no competitively optimal
/// Huffman code: exactly 1/3.
Rational n4_nonoptimal_fraction();

/// The size-4 source with two Huffman codes of which only one is
/// competitively optimal.
Source fixture_two_huffman();

struct FourCodesFixture {
    Source source;
    LengthProfile h1, h2, c1, c2;
};

/// The size-6 source whose codes H1, H2, C1 form a strict dominance cycle,
/// with C2 an expected-length-optimal non-Huffman pairing.
FourCodesFixture fixture_four_codes();

}  // namespace prefixcomp
