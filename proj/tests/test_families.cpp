#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "helpers.hpp"
#include "prefixcomp/coding.hpp"
#include "prefixcomp/competition.hpp"
#include "prefixcomp/families.hpp"
#include "prefixcomp/oracle.hpp"

using namespace prefixcomp;

namespace {
Rational r(long n, long d) { return Rational(n, d); }
}

TEST_CASE("one-third family at n = 4, eps = 1/30") {
    FamilyInstance f = family_one_third(4, r(1, 30));
    CHECK(f.source.probabilities() ==
          std::vector<Rational>{r(11, 30), r(10, 30), r(8, 30), r(1, 30)});
    CHECK(f.reference_profile == LengthProfile({1, 2, 3, 3}));
    CHECK(f.challenger_profile == LengthProfile({3, 1, 2, 3}));
    CHECK(f.predicted_advantage == r(7, 30));
    CHECK(f.predicted_avg_length_gap == r(2, 15));
    CHECK(huffman(f.source).profile == f.reference_profile);
    CHECK(compete(f.source, f.challenger_profile, f.reference_profile).advantage ==
          f.predicted_advantage);
    CHECK(expected_length(f.source, f.challenger_profile) -
              expected_length(f.source, f.reference_profile) ==
          f.predicted_avg_length_gap);
}

TEST_CASE("one-third family across sizes and epsilons") {
    FamilyInstance f5 = family_one_third(5, r(1, 100));
    CHECK(f5.predicted_advantage == r(91, 300));
    CHECK(compete(f5.source, f5.challenger_profile, f5.reference_profile).advantage ==
          r(91, 300));

    Rational prev_adv(-1);
    Rational prev_gap(2);
    for (long denom : {30, 300, 3000, 30000}) {
        for (int n : {4, 6, 9}) {
            FamilyInstance f = family_one_third(n, r(1, denom));
            CHECK(compete(f.source, f.challenger_profile, f.reference_profile).advantage ==
                  f.predicted_advantage);
            CHECK(expected_length(f.source, f.challenger_profile) -
                      expected_length(f.source, f.reference_profile) ==
                  f.predicted_avg_length_gap);
            CHECK(f.predicted_advantage < r(1, 3));
        }
        FamilyInstance f = family_one_third(4, r(1, denom));
        CHECK(f.predicted_advantage > prev_adv);  // advantage climbs toward 1/3
        CHECK(f.predicted_avg_length_gap < prev_gap);
        prev_adv = f.predicted_advantage;
        prev_gap = f.predicted_avg_length_gap;
    }
}

TEST_CASE("one-third family guards") {
    CHECK_THROWS_AS(family_one_third(3, r(1, 30)), DomainError);
    CHECK_THROWS_AS(family_one_third(4, r(1, 2)), DomainError);  // p3 would go negative
    CHECK_THROWS_AS(family_one_third(4, r(0, 1)), DomainError);
}

TEST_CASE("shannon-fano gap family") {
    FamilyInstance f = family_sf_gap(5, r(1, 2000));
    CHECK(f.reference_profile == LengthProfile({2, 3, 4, 5, 4}));
    CHECK(f.challenger_profile == LengthProfile({1, 2, 3, 4, 4}));
    CHECK(f.predicted_advantage == 1 - f.source.probability(4));
    CHECK(f.predicted_advantage == r(15, 16) - r(1, 500));
    CHECK(compete(f.source, f.challenger_profile, f.reference_profile).advantage ==
          f.predicted_advantage);
    CHECK(f.predicted_advantage >= 1 - kraft_weight(3));

    FamilyInstance one = family_sf_gap(1, r(1, 8));
    CHECK(one.source.probabilities() == std::vector<Rational>{r(1, 1)});
    CHECK(one.predicted_advantage == 0);
}

TEST_CASE("shannon-fano gap family across sizes") {
    for (int n = 1; n <= 10; ++n) {
        Rational eps = kraft_weight(2 * n) / 2;  // 4^-n / 2
        FamilyInstance f = family_sf_gap(n, eps);
        CHECK(shannon_fano(f.source) == f.reference_profile);
        Rational adv = compete(f.source, f.challenger_profile, f.reference_profile).advantage;
        CHECK(adv == f.predicted_advantage);
        CHECK(adv >= 1 - 4 * kraft_weight(n));  // 1 - 2^{-n+2}
        Rational gap = expected_length(f.source, f.reference_profile) -
                       expected_length(f.source, f.challenger_profile);
        CHECK(gap == f.predicted_avg_length_gap);
        CHECK(to_double(expected_length(f.source, f.challenger_profile)) <
              entropy(f.source) + 4.0 * to_double(kraft_weight(n)));
    }
}

TEST_CASE("shannon-fano gap family guards") {
    CHECK_THROWS_AS(family_sf_gap(5, r(1, 500)), DomainError);  // eps >= 4^-5
    CHECK_THROWS_AS(family_sf_gap(5, r(0, 1)), DomainError);
    CHECK_THROWS_AS(family_sf_gap(0, r(1, 8)), DomainError);
}

TEST_CASE("small alphabets are always competitively optimal") {
    CHECK(classify_small(make_source({r(1, 2), r(1, 3), r(1, 6)}, NumericMode::exact()))
              .status == OptimalityStatus::Optimal);
    CHECK(classify_small(make_source({r(1, 1)}, NumericMode::exact())).status ==
          OptimalityStatus::Optimal);
    OptimalityVerdict v = classify_small(
        make_source(std::vector<double>{0.9, 0.1}, NumericMode::floating()));
    CHECK(v.status == OptimalityStatus::Optimal);
    CHECK(v.method == VerdictMethod::SmallN);
    CHECK_THROWS_AS(classify_small(fixture_two_huffman()), DomainError);
}

TEST_CASE("n = 4 closed-form classification") {
    CHECK(classify_n4(make_source({r(2, 5), r(3, 10), r(1, 5), r(1, 10)},
                                  NumericMode::exact())) == N4Class::NotOptimal);
    CHECK(classify_n4(make_source({r(7, 10), r(1, 10), r(1, 10), r(1, 10)},
                                  NumericMode::exact())) == N4Class::Optimal);
    CHECK(classify_n4(fixture_two_huffman()) == N4Class::Boundary);
    CHECK_THROWS_AS(classify_n4(make_source({r(2, 5), r(3, 10), r(1, 10), r(1, 5)},
                                            NumericMode::exact())),
                    DomainError);  // not sorted
    CHECK_THROWS_AS(classify_n4(make_source({r(1, 2), r(1, 3), r(1, 6)},
                                            NumericMode::exact())),
                    DomainError);  // wrong size
    CHECK(classify_n4(make_source({r(9, 20), r(5, 20), r(4, 20), r(2, 20)},
                                  NumericMode::exact())) == N4Class::Boundary);
}

TEST_CASE("classification agrees with the brute-force oracle") {
    int checked = 0;
    for (std::uint64_t tag = 0; tag < 200; ++tag) {
        Source s = random_exact_source(71, tag, 4, 200);
        std::vector<Rational> probs = s.probabilities();
        std::sort(probs.begin(), probs.end(), std::greater<Rational>());
        Source sorted = make_source(probs, NumericMode::exact());
        N4Class cls = classify_n4(sorted);
        if (cls == N4Class::Boundary) continue;
        bool any_optimal = false;
        for (const LengthProfile& p : all_optimal_profiles(sorted))
            if (brute_force_is_optimal(sorted, p).status == OptimalityStatus::Optimal)
                any_optimal = true;
        CHECK(any_optimal == (cls == N4Class::Optimal));
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("hexahedron volumes") {
    N4Volumes v = n4_hexahedron_volumes();
    CHECK(v.tetrahedron1 == r(1, 1080));
    CHECK(v.tetrahedron2 == r(1, 720));
    CHECK(v.reference_cell == r(1, 144));
    CHECK(n4_nonoptimal_fraction() == r(1, 3));
}

TEST_CASE("named fixtures") {
    Source two = fixture_two_huffman();
    CHECK(two.probabilities() ==
          std::vector<Rational>{r(1, 3), r(1, 3), r(1, 6), r(1, 6)});
    CHECK(two.labels() == std::vector<std::string>{"a", "b", "c", "d"});

    FourCodesFixture f = fixture_four_codes();
    CHECK(f.source.probabilities() ==
          std::vector<Rational>{r(1, 3), r(1, 3), r(1, 9), r(1, 9), r(1, 18), r(1, 18)});
    CHECK(f.h1 == LengthProfile({1, 2, 3, 4, 5, 5}));
    CHECK(f.h2 == LengthProfile({2, 2, 3, 3, 3, 3}));
    CHECK(f.c1 == LengthProfile({3, 1, 2, 4, 5, 5}));
    CHECK(f.c2 == LengthProfile({2, 2, 3, 3, 3, 3}));
    for (const LengthProfile* p : {&f.h1, &f.h2, &f.c1, &f.c2}) CHECK(is_complete(*p));
    // H1 and H2 arise from actual merge orders; C2's pairing is not a Huffman
    // tree but its profile is still expected-length optimal
    std::set<LengthProfile> merges = huffman_profiles_all(f.source);
    CHECK(merges.count(f.h1) == 1);
    CHECK(merges.count(f.h2) == 1);
    CHECK(all_optimal_profiles(f.source).count(f.c2) == 1);
    CHECK(expected_length(f.source, f.h1) == expected_length(f.source, f.h2));
}
