#include <functional>

#include "doctest.h"
#include "generate.hpp"
#include "rotation.hpp"

using namespace czlab;

namespace {

std::vector<Rational> rats(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(parse_rational(t));
    return out;
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::none;
}

}  // namespace

TEST_CASE("make_rotation sorts, balances and validates") {
    Rotation r1 = make_rotation(1, rats({"-1/5", "1/5"}), 4);
    CHECK(r1.angles == rats({"-1/5", "1/5"}));

    Rotation r2 = make_rotation(2, rats({"0", "9/20", "3/5"}), 4);
    CHECK(r2.angles == rats({"-7/20", "1/10", "1/4"}));

    CHECK(code_of([] { make_rotation(1, rats({"-1/2", "1/2"}), 4); }) ==
          Errc::degenerate_rotation);
    // difference 2/5 becomes integral at k = 5
    CHECK(code_of([] { make_rotation(1, rats({"-1/5", "1/5"}), 5); }) ==
          Errc::degenerate_rotation);
}

TEST_CASE("make_rotation reduces to the canonical spectrum window") {
    // (-3/5, 3/5) generates the same element as (-2/5, 2/5): the spectrum
    // points between them interleave.
    Rotation r = make_rotation(1, rats({"-3/5", "3/5"}), 4);
    CHECK(r.angles == rats({"-2/5", "2/5"}));
    // canonical inputs are fixed points of the reduction
    Rotation again = make_rotation(1, r.angles, 4);
    CHECK(again.angles == r.angles);
}

TEST_CASE("trivial mean indices are 2(n+1) a_i") {
    Rotation r2 = make_rotation(2, rats({"-7/20", "1/10", "1/4"}), 4);
    CHECK(trivial_mean_indices(r2) == rats({"-21/10", "3/5", "3/2"}));
    Rotation r1 = make_rotation(1, rats({"-1/5", "1/5"}), 4);
    CHECK(trivial_mean_indices(r1) == rats({"-4/5", "4/5"}));
}

TEST_CASE("recapped_fixed_points tabulates delta by label") {
    Rotation r1 = make_rotation(1, rats({"-1/5", "1/5"}), 4);
    FixedPointTable t1 = recapped_fixed_points(r1);
    CHECK(t1.delta == rats({"-4/5", "4/5"}));

    Rotation r2 = make_rotation(2, rats({"-7/20", "1/10", "1/4"}), 4);
    FixedPointTable t2 = recapped_fixed_points(r2);
    CHECK(t2.delta == rats({"-21/10", "3/5", "3/2"}));

    // per-point linearized descriptors agree with the table
    REQUIRE(t2.descriptors.size() == 3);
    for (std::int64_t l = 0; l <= 2; ++l) {
        CHECK(cz_index(t2.descriptors[static_cast<std::size_t>(l)]) == 2 * l - 2);
        CHECK(mean_index(t2.descriptors[static_cast<std::size_t>(l)]) ==
              t2.delta[static_cast<std::size_t>(l)]);
    }

    // recapping actually shifts for non-canonical trivial indices
    Rotation shifted = make_rotation(1, rats({"-3/5", "3/5"}), 4);
    CHECK(recapped_fixed_points(shifted).delta == rats({"-8/5", "8/5"}));
}

TEST_CASE("fixed point table invariants") {
    CHECK(code_of([] { FixedPointTable::create(1, rats({"-4/5", "-4/5"})); }) ==
          Errc::schema_error);
    CHECK(code_of([] { FixedPointTable::create(1, rats({"4/5", "-4/5"})); }) ==
          Errc::schema_error);
    CHECK(code_of([] { FixedPointTable::create(1, rats({"-5/2", "4/5"})); }) ==
          Errc::schema_error);  // window |delta_0 + 1| < 1 violated
    CHECK(code_of([] { FixedPointTable::create(1, rats({"-4/5", "4/5", "6/5"})); }) ==
          Errc::schema_error);
}

TEST_CASE("action_spectrum labels the lattice") {
    Rotation r = make_rotation(1, rats({"-1/5", "1/5"}), 4);
    MarkedSpectrum s = action_spectrum(r, Rational(-3, 2), Rational(3, 2));
    REQUIRE(s.entries.size() == 6);
    std::vector<std::int64_t> labels, indices;
    std::vector<Rational> values;
    for (const auto& e : s.entries) {
        labels.push_back(e.label);
        indices.push_back(e.index);
        values.push_back(e.value);
    }
    CHECK(labels == std::vector<std::int64_t>{-2, -1, 0, 1, 2, 3});
    CHECK(indices == std::vector<std::int64_t>{-5, -3, -1, 1, 3, 5});
    CHECK(values == rats({"-6/5", "-4/5", "-1/5", "1/5", "4/5", "6/5"}));

    CHECK(code_of([&] { action_spectrum(r, Rational(1, 5), Rational(3, 2)); }) ==
          Errc::window_bound_in_spectrum);

    // degenerate duplicate values are detected (bypasses make_rotation)
    Rotation broken{1, rats({"1/5", "1/5"}), 4};
    CHECK(code_of([&] { action_spectrum(broken, Rational(-1, 2), Rational(1, 2)); }) ==
          Errc::duplicate_action);
}

TEST_CASE("balanced tables and the matching rotation") {
    FixedPointTable t = FixedPointTable::create(1, rats({"-4/5", "4/5"}));
    CHECK(is_balanced(t));
    Rotation r = matching_rotation(t, 4);
    CHECK(r.angles == rats({"-1/5", "1/5"}));

    FixedPointTable t2 = FixedPointTable::create(2, rats({"-21/10", "3/5", "3/2"}));
    Rotation r2 = matching_rotation(t2, 4);
    CHECK(r2.angles == rats({"-7/20", "1/10", "1/4"}));
    CHECK(recapped_fixed_points(r2).delta == t2.delta);

    FixedPointTable unbalanced = FixedPointTable::create(1, rats({"-4/5", "9/10"}));
    CHECK(!is_balanced(unbalanced));
    CHECK(code_of([&] { matching_rotation(unbalanced, 4); }) == Errc::not_balanced);

    // balanced and window-admissible, but the extended marked spectrum would
    // not be monotone (delta span exceeds 2(n+1)): no rotation realizes it.
    FixedPointTable unrealizable = FixedPointTable::create(2, rats({"-18/5", "6/25", "84/25"}));
    CHECK(is_balanced(unrealizable));
    CHECK(code_of([&] { matching_rotation(unrealizable, 4); }) == Errc::recapping_failed);
}

TEST_CASE("floquet multipliers reduce into (-1,1)") {
    Rotation r1 = make_rotation(1, rats({"-1/5", "1/5"}), 4);
    CHECK(floquet_multipliers(r1, 0) == rats({"-4/5"}));
    CHECK(floquet_multipliers(r1, 1) == rats({"4/5"}));

    Rotation r2 = make_rotation(2, rats({"-7/20", "1/10", "1/4"}), 4);
    CHECK(floquet_multipliers(r2, 2) == rats({"-4/5", "3/10"}));
    CHECK(code_of([&] { floquet_multipliers(r2, 3); }) == Errc::invalid_argument);
}

TEST_CASE("matching hypotheses report") {
    // n = 1: the two conjugate-closed spectra always coincide.
    FixedPointTable t1 = FixedPointTable::create(1, rats({"-4/5", "4/5"}));
    auto rep1 = check_matching_hypotheses(t1, 4);
    CHECK(!rep1.holds);
    CHECK(rep1.within_point_distinct);
    CHECK(!rep1.across_points_disjoint);
    CHECK(rep1.ordered_values_distinct);

    // n = 2 worked example: within-point distinct, the remark-style ordered
    // values all distinct, class sets still share the mutual pairs.
    FixedPointTable t2 = FixedPointTable::create(2, rats({"-21/10", "3/5", "3/2"}));
    auto rep2 = check_matching_hypotheses(t2, 4);
    CHECK(rep2.within_point_distinct);
    CHECK(rep2.ordered_values_distinct);
    CHECK(!rep2.across_points_disjoint);

    // 3 a_0 integral forces an eigenvalue-class collision at point 0.
    Rotation collide = make_rotation(2, rats({"-1/3", "1/9", "2/9"}), 8);
    auto rep3 = check_matching_hypotheses(recapped_fixed_points(collide), 8);
    CHECK(!rep3.within_point_distinct);
    CHECK(!rep3.holds);
}

TEST_CASE("resonance lattice enumeration") {
    FixedPointTable t = FixedPointTable::create(1, rats({"-4/5", "4/5"}));
    auto res = resonance_lattice(t, 2);
    std::vector<std::vector<std::int64_t>> expected = {{-2, -2}, {-1, -1}, {1, 1}, {2, 2}};
    CHECK(res == expected);

    // every balanced table carries the all-ones resonance
    FixedPointTable t2 = FixedPointTable::create(2, rats({"-21/10", "3/5", "3/2"}));
    auto res2 = resonance_lattice(t2, 1);
    bool has_ones = false;
    for (const auto& v : res2) has_ones |= (v == std::vector<std::int64_t>{1, 1, 1});
    CHECK(has_ones);
}

TEST_CASE("s2 antisymmetry check") {
    PathDescriptor d0 = PathDescriptor::create(0, 0, 0,
                                               {EllipticEntry{{Rational(7, 10), 19}, 1, -1}},
                                               19);
    auto pass = s2_antisymmetry_check(d0, inverse(d0), 19);
    CHECK(pass.passed);
    CHECK(pass.mutual_inverses);
    CHECK(pass.mean_indices_opposite);

    PathDescriptor a = PathDescriptor::create(0, 0, 0,
                                              {EllipticEntry{{Rational(7, 10), 19}, 1, 1}}, 19);
    PathDescriptor b = PathDescriptor::create(0, 0, 0,
                                              {EllipticEntry{{Rational(3, 10), 19}, 1, -1}}, 19);
    auto violation = s2_antisymmetry_check(a, b, 9);
    CHECK(!violation.passed);
    CHECK(violation.first_violation == 3);  // floors of 7k/20 and 3k/20 part at k = 3
    CHECK(violation.mu0 == 3);
    CHECK(violation.mu1 == -1);

    CHECK(code_of([&] { s2_antisymmetry_check(PathDescriptor::empty(), a, 5); }) ==
          Errc::wrong_dimension);
    PathDescriptor wide = PathDescriptor::create(0, 0, 0,
                                                 {EllipticEntry{{Rational(7, 10), 19}, 2, 0}},
                                                 19);
    CHECK(code_of([&] { s2_antisymmetry_check(wide, a, 5); }) == Errc::wrong_dimension);
}

TEST_CASE("loop triviality criterion") {
    CHECK(is_trivial_rotation_loop(rats({"-1/2", "1/2"})));
    CHECK(is_trivial_rotation_loop(rats({"0", "1"})));  // normalizes to (-1/2, 1/2)
    CHECK(is_trivial_rotation_loop(rats({"-1", "0", "1"})));
    CHECK(!is_trivial_rotation_loop(rats({"-1/5", "1/5"})));
    CHECK(!is_trivial_rotation_loop(rats({"-1/3", "1/3"})));  // diffs not integral
}

TEST_CASE("equal spectra come from equal canonical angle vectors") {
    // (-3/5, 3/5) and (-2/5, 2/5) generate the same element; after the
    // canonical reduction their marked spectra agree entry for entry over a
    // window covering labels -(n+1)..2(n+1).
    Rotation a = make_rotation(1, rats({"-3/5", "3/5"}), 4);
    Rotation b = make_rotation(1, rats({"-2/5", "2/5"}), 4);
    REQUIRE(a == b);
    Rational lo = Rational(-3) - Rational(1, 7919);
    Rational hi = Rational(3) + Rational(1, 7919);
    MarkedSpectrum sa = action_spectrum(a, lo, hi);
    MarkedSpectrum sb = action_spectrum(b, lo, hi);
    REQUIRE(sa.entries.size() == sb.entries.size());
    CHECK(sa.entries.front().label <= -2);
    CHECK(sa.entries.back().label >= 4);
    for (std::size_t i = 0; i < sa.entries.size(); ++i) {
        CHECK(sa.entries[i].label == sb.entries[i].label);
        CHECK(sa.entries[i].value == sb.entries[i].value);
    }
}

TEST_CASE("property: recapping sums to zero and matching round trips") {
    SplitMix64 rng(31);
    RotationFamily family;
    std::int64_t rejected = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Rotation r = draw_rotation(rng, family, rejected);
        FixedPointTable t = recapped_fixed_points(r);
        Rational sum(0);
        for (const auto& d : t.delta) sum += d;
        REQUIRE(sum == 0);
        REQUIRE(matching_rotation(t, r.horizon) == r);
    }
}
