#include <functional>

#include "doctest.h"
#include "json_io.hpp"

using namespace czlab;

namespace {

const char* kDescriptorJson =
    R"({"loop": 0, "mult_minus_one": 0, "hyperbolic_pairs": 0,)"
    R"( "elliptic": [{"theta_num": 7, "theta_den": 10, "multiplicity": 1, "signature": 1}],)"
    R"( "horizon": 19})";

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::none;
}

}  // namespace

TEST_CASE("descriptor JSON round trip") {
    PathDescriptor d = descriptor_from_json(parse_json_text(kDescriptorJson));
    CHECK(d.horizon() == 19);
    CHECK(d.elliptic().size() == 1);
    PathDescriptor back = descriptor_from_json(descriptor_to_json(d));
    CHECK(back == d);
    CHECK(back.horizon() == d.horizon());
}

TEST_CASE("descriptor JSON schema errors") {
    CHECK(code_of([] { parse_json_text("{not json"); }) == Errc::parse_error);
    CHECK(code_of([] { descriptor_from_json(parse_json_text("[]")); }) == Errc::schema_error);
    CHECK(code_of([] {
              descriptor_from_json(parse_json_text(R"({"loop": 0, "horizon": 5})"));
          }) == Errc::schema_error);
    // fractional angles must come as integer numerator/denominator pairs
    CHECK(code_of([] {
              descriptor_from_json(parse_json_text(
                  R"({"loop": 0, "mult_minus_one": 0, "hyperbolic_pairs": 0,
                      "elliptic": [{"theta_num": 0.7, "theta_den": 1,
                                    "multiplicity": 1, "signature": 1}],
                      "horizon": 5})"));
          }) == Errc::schema_error);
    // schema is intact but the descriptor violates the horizon guard
    CHECK(code_of([] {
              descriptor_from_json(parse_json_text(
                  R"({"loop": 0, "mult_minus_one": 0, "hyperbolic_pairs": 0,
                      "elliptic": [{"theta_num": 7, "theta_den": 10,
                                    "multiplicity": 1, "signature": 1}],
                      "horizon": 20})"));
          }) == Errc::nondegeneracy_violation);
}

TEST_CASE("rotation and table JSON round trips") {
    Rotation r = rotation_from_json(
        parse_json_text(R"({"n": 2, "angles": ["0", "9/20", "3/5"], "horizon": 4})"));
    CHECK(r.angles == std::vector<Rational>{Rational(-7, 20), Rational(1, 10), Rational(1, 4)});
    Rotation back = rotation_from_json(rotation_to_json(r));
    CHECK(back == r);

    FixedPointTable t = recapped_fixed_points(r);
    FixedPointTable parsed = table_from_json(table_to_json(t));
    CHECK(parsed.delta == t.delta);
    REQUIRE(parsed.descriptors.size() == 3);
    CHECK(parsed.descriptors[1] == t.descriptors[1]);

    CHECK(code_of([] {
              table_from_json(parse_json_text(R"({"n": 1, "delta": ["4/5", "-4/5"]})"));
          }) == Errc::schema_error);
}

TEST_CASE("lifted path JSON") {
    LiftedPath p = lifted_path_from_json(
        parse_json_text(R"({"points": [["1/10", "3/2"], ["19/10", "5/2"]]})"));
    REQUIRE(p.points.size() == 2);
    CHECK(p.points[0][0] == Rational(1, 10));
    LiftedPath back = lifted_path_from_json(lifted_path_to_json(p));
    CHECK(back.points == p.points);
    CHECK(code_of([] { lifted_path_from_json(parse_json_text(R"({"points": 3})")); }) ==
          Errc::schema_error);
}

TEST_CASE("sequence CSV uses the mandated header and exact rows") {
    PathDescriptor d = descriptor_from_json(parse_json_text(kDescriptorJson));
    CHECK(sequences_csv(d, 3) == "k,mu,jump\n1,1,0\n2,1,2\n3,3,0\n");
}

TEST_CASE("spectrum CSV") {
    Rotation r = rotation_from_json(
        parse_json_text(R"({"n": 1, "angles": ["-1/5", "1/5"], "horizon": 4})"));
    MarkedSpectrum s = action_spectrum(r, Rational(-3, 2), Rational(3, 2));
    CHECK(spectrum_csv(s) ==
          "label,index,value\n-2,-5,-6/5\n-1,-3,-4/5\n0,-1,-1/5\n1,1,1/5\n2,3,4/5\n3,5,6/5\n");
}

TEST_CASE("report serializers keep machine-readable shapes") {
    PathDescriptor d = descriptor_from_json(parse_json_text(kDescriptorJson));
    auto condition_b = check_condition_b(d, 2);
    Json jb = condition_b_to_json(condition_b);
    CHECK(jb["holds"] == false);
    CHECK(jb["failures"].size() == 1);

    auto anti = s2_antisymmetry_check(d, inverse(d), 10);
    Json ja = antisymmetry_report_to_json(anti);
    CHECK(ja["passed"] == true);
    CHECK(ja["mutual_inverses"] == true);

    auto report = verify_intersect_divisibility(
        PathDescriptor::create(0, 0, 0, {EllipticEntry{{Rational(7, 10), 19}, 2, 2}}, 19), 2, 8);
    Json ji = intersect_report_to_json(report);
    CHECK(ji["passed"] == true);
    CHECK(ji["first_violation"].is_null());
}
