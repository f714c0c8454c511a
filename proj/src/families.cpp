#include "prefixcomp/families.hpp"

#include <array>

#include "prefixcomp/coding.hpp"

namespace prefixcomp {

FamilyInstance family_one_third(int n, const Rational& eps) {
    if (n < 4) throw DomainError(Errc::WrongSize, "family requires n >= 4");
    if (eps <= 0) throw DomainError(Errc::BadEpsilon, "eps must be positive");
    Rational third(1, 3);
    Rational alpha = (eps / 2) / (1 - kraft_weight(n - 3));

    std::vector<Rational> probs{third + eps, third, third - 2 * eps};
    for (int k = 4; k <= n; ++k) probs.push_back(alpha * 16 * kraft_weight(k));
    for (size_t i = 0; i + 1 < probs.size(); ++i)
        if (probs[i] <= probs[i + 1] || probs[i + 1] <= 0)
            throw DomainError(Errc::BadEpsilon,
                              "eps too large: probabilities not positive and strictly ordered");

    Source source = make_source(probs, NumericMode::exact());
    std::vector<int> huff_lens;
    for (int k = 1; k < n; ++k) huff_lens.push_back(k);
    huff_lens.push_back(n - 1);
    LengthProfile reference(huff_lens);
    if (huffman(source).profile != reference)
        throw DomainError(Errc::BadEpsilon, "eps breaks the intended Huffman structure");

    std::vector<int> chal_lens = huff_lens;
    chal_lens[0] = 3;
    chal_lens[1] = 1;
    chal_lens[2] = 2;
    return {std::move(source), std::move(reference), LengthProfile(std::move(chal_lens)),
            third - 3 * eps, 4 * eps};
}

FamilyInstance family_sf_gap(int n, const Rational& eps) {
    if (n < 1) throw DomainError(Errc::WrongSize, "family requires n >= 1");
    Rational bound = kraft_weight(n);
    bound *= bound;  // 4^-n
    if (eps <= 0 || eps >= bound)
        throw DomainError(Errc::BadEpsilon, "requires 0 < eps < 4^-n");

    std::vector<Rational> probs;
    for (int k = 1; k < n; ++k) probs.push_back(kraft_weight(k) - eps);
    probs.push_back(kraft_weight(n - 1) + (n - 1) * eps);
    Source source = make_source(probs, NumericMode::exact());

    LengthProfile reference = shannon_fano(source);
    std::vector<int> chal_lens;
    for (int k = 1; k < n; ++k) chal_lens.push_back(k);  // codewords 1^{k-1}0
    chal_lens.push_back(n - 1);                          // codeword 1^{n-1}
    Rational advantage = 1 - probs.back();
    return {std::move(source), std::move(reference), LengthProfile(std::move(chal_lens)),
            advantage, advantage};
}

OptimalityVerdict classify_small(const Source& s) {
    if (s.size() > 3)
        throw DomainError(Errc::WrongSize, "closed form covers n <= 3 only");
    return {OptimalityStatus::Optimal, std::nullopt, VerdictMethod::SmallN};
}

N4Class classify_n4(const Source& s) {
    if (s.size() != 4) throw DomainError(Errc::WrongSize, "classifier requires n = 4");
    const auto& p = s.probabilities();
    for (int i = 0; i + 1 < 4; ++i)
        if (p[i] < p[i + 1])
            throw DomainError(Errc::NotSorted, "probabilities must be non-increasing");

    Rational pair34 = p[2] + p[3];
    if (pair34 > p[0]) return N4Class::Optimal;      // balanced Huffman, exterior
    if (pair34 == p[0]) return N4Class::Boundary;    // both Huffman shapes exist
    Rational pair23 = p[1] + p[2];                   // best challenger margin
    if (pair23 > p[0]) return N4Class::NotOptimal;
    if (pair23 == p[0]) return N4Class::Boundary;
    return N4Class::Optimal;
}

namespace {

Rational det4(std::array<std::array<Rational, 4>, 4> m) {
    // Gaussian elimination, exact.
    Rational det(1);
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < 4; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Rational tetra_volume(const std::array<std::array<Rational, 3>, 4>& v) {
    std::array<std::array<Rational, 4>, 4> m;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = v[i][j];
        m[i][3] = 1;
    }
    Rational d = det4(m);
    if (d < 0) d = -d;
    return d / 6;
}

Rational r(int num, int den) { return Rational(num, den); }

}  // namespace

N4Volumes n4_hexahedron_volumes() {
    std::array<std::array<Rational, 3>, 3> base = {{
        {r(1, 2), r(1, 2), r(0, 1)},
        {r(2, 5), r(1, 5), r(1, 5)},
        {r(1, 3), r(1, 3), r(1, 3)},
    }};
    N4Volumes out;
    out.tetrahedron1 =
        tetra_volume({base[0], base[1], base[2], {r(1, 3), r(1, 3), r(1, 6)}});
    out.tetrahedron2 =
        tetra_volume({base[0], base[1], base[2], {r(1, 2), r(1, 4), r(1, 4)}});
    out.reference_cell = tetra_volume({{{r(1, 1), r(0, 1), r(0, 1)},
                                        {r(1, 2), r(1, 2), r(0, 1)},
                                        {r(1, 3), r(1, 3), r(1, 3)},
                                        {r(1, 4), r(1, 4), r(1, 4)}}});
    return out;
}

Rational n4_nonoptimal_fraction() {
    N4Volumes v = n4_hexahedron_volumes();
    return (v.tetrahedron1 + v.tetrahedron2) / v.reference_cell;
}

Source fixture_two_huffman() {
    return make_source(std::vector<Rational>{r(1, 3), r(1, 3), r(1, 6), r(1, 6)},
                       NumericMode::exact(), {"a", "b", "c", "d"});
}

FourCodesFixture fixture_four_codes() {
    Source source =
        make_source(std::vector<Rational>{r(1, 3), r(1, 3), r(1, 9), r(1, 9), r(1, 18),
                                          r(1, 18)},
                    NumericMode::exact(), {"a", "b", "c", "d", "e", "f"});
    return {std::move(source),
            LengthProfile({1, 2, 3, 4, 5, 5}),   // H1
            LengthProfile({2, 2, 3, 3, 3, 3}),   // H2
            LengthProfile({3, 1, 2, 4, 5, 5}),   // C1: H2's tree relabeled
            LengthProfile({2, 2, 3, 3, 3, 3})};  // C2: non-Huffman pairing of H2's lengths
}

}  // namespace prefixcomp
