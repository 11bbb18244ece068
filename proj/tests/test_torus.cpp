#include <functional>

#include "doctest.h"
#include "generate.hpp"
#include "torus.hpp"

using namespace czlab;

namespace {

PathDescriptor two_angle_descriptor() {
    return PathDescriptor::create(0, 0, 0,
                                  {EllipticEntry{{Rational(7, 10), 19}, 1, 1},
                                   EllipticEntry{{Rational(3, 10), 19}, 1, -1}},
                                  19);
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::none;
}

LiftedPath segment(std::vector<Rational> from, std::vector<Rational> to) {
    LiftedPath p;
    p.points = {std::move(from), std::move(to)};
    return p;
}

}  // namespace

TEST_CASE("eigenvalue_vector iterates modulo 2") {
    PathDescriptor d = two_angle_descriptor();
    // entries are sorted by angle: (3/10, 7/10)
    CHECK(eigenvalue_vector(d, 0).coordinates == std::vector<Rational>{0, 0});
    CHECK(eigenvalue_vector(d, 1).coordinates ==
          std::vector<Rational>{Rational(3, 10), Rational(7, 10)});
    CHECK(eigenvalue_vector(d, 3).coordinates ==
          std::vector<Rational>{Rational(9, 10), Rational(1, 10)});
    CHECK(code_of([&] { eigenvalue_vector(d, 20); }) == Errc::horizon_exceeded);
}

TEST_CASE("path_intersection counts even-integer wall crossings") {
    IndexCycle w1{{1}};
    CHECK(path_intersection(segment({Rational(1, 10)}, {Rational(19, 10)}), w1) == 0);
    CHECK(path_intersection(segment({Rational(19, 10)}, {Rational(21, 10)}), w1) == 1);
    CHECK(path_intersection(segment({Rational(21, 10)}, {Rational(19, 10)}), w1) == -1);
    // several walls at once, with weights
    IndexCycle w2{{2, -1}};
    LiftedPath p = segment({Rational(1, 2), Rational(1, 2)},
                           {Rational(9, 2), Rational(5, 2)});
    CHECK(path_intersection(p, w2) == 2 * 2 + (-1) * 1);
}

TEST_CASE("closed lifted polylines have zero intersection") {
    IndexCycle w{{1, 1}};
    LiftedPath square;
    square.points = {{Rational(1, 2), Rational(1, 2)},
                     {Rational(5, 2), Rational(1, 2)},
                     {Rational(5, 2), Rational(3, 2)},
                     {Rational(1, 2), Rational(3, 2)},
                     {Rational(1, 2), Rational(1, 2)}};
    CHECK(path_intersection(square, w) == 0);
}

TEST_CASE("path_intersection rejects degenerate inputs") {
    IndexCycle w{{1}};
    CHECK(code_of([&] { path_intersection(segment({Rational(2)}, {Rational(5, 2)}), w); }) ==
          Errc::endpoint_on_cycle);
    CHECK(code_of([&] { path_intersection(segment({Rational(0)}, {Rational(0)}), w); }) ==
          Errc::degenerate_segment);
    // a vertex on a wall mid-path is also rejected
    IndexCycle w2{{1, 1}};
    LiftedPath p;
    p.points = {{Rational(1, 2), Rational(1, 2)},
                {Rational(2), Rational(1, 2)},
                {Rational(5, 2), Rational(3, 2)}};
    CHECK(code_of([&] { path_intersection(p, w2); }) == Errc::endpoint_on_cycle);
    CHECK(code_of([&] { path_intersection(LiftedPath{{{Rational(1, 2)}}}, w); }) ==
          Errc::invalid_argument);
}

TEST_CASE("arc_intersection matches the jump terms") {
    PathDescriptor d = PathDescriptor::create(0, 0, 0,
                                              {EllipticEntry{{Rational(7, 10), 19}, 1, 1}}, 19);
    CHECK(arc_intersection(d, 1) == 0);
    CHECK(arc_intersection(d, 2) == 1);
    CHECK(arc_intersection(two_angle_descriptor(), 2) == 1);

    PathDescriptor with_loop = PathDescriptor::create(2, 0, 0,
                                                      {EllipticEntry{{Rational(7, 10), 19}, 1, 1}},
                                                      19);
    CHECK(code_of([&] { arc_intersection(with_loop, 1); }) == Errc::not_elliptic);
}

TEST_CASE("verify_intersect_divisibility on the worked examples") {
    PathDescriptor d = PathDescriptor::create(0, 0, 0,
                                              {EllipticEntry{{Rational(7, 10), 19}, 2, 2}}, 19);
    auto report = verify_intersect_divisibility(d, 2, 10);
    CHECK(report.passed);
    CHECK(!report.first_violation.has_value());

    CHECK(verify_intersect_divisibility(PathDescriptor::empty(), 3, 5).passed);

    PathDescriptor bad = PathDescriptor::create(0, 0, 0,
                                                {EllipticEntry{{Rational(7, 10), 19}, 1, 1}}, 19);
    CHECK(code_of([&] { verify_intersect_divisibility(bad, 2, 10); }) ==
          Errc::hypothesis_not_met);
}

TEST_CASE("property: 2<arc,T> equals the jump sequence for elliptic descriptors") {
    SplitMix64 rng(21);
    DescriptorFamily family;
    family.min_entries = 1;
    family.loop_half_range = 0;
    family.max_mult_minus_one = 0;
    family.max_hyperbolic_pairs = 0;
    std::int64_t rejected = 0;
    for (int trial = 0; trial < 40; ++trial) {
        PathDescriptor d = draw_descriptor(rng, family, rejected);
        std::int64_t k_max = std::min<std::int64_t>(60, d.horizon() - 1);
        auto jumps = jump_sequence(d, k_max);
        for (std::int64_t k = 1; k <= k_max; ++k)
            REQUIRE(2 * arc_intersection(d, k) == jumps[static_cast<std::size_t>(k - 1)]);
    }
}

TEST_CASE("property: concatenation additivity and translation invariance") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        // random polyline in r = 2 with vertices off the walls (odd/denominator 3)
        auto vertex = [&rng]() {
            return std::vector<Rational>{Rational(2 * rng.range(-4, 4) + 1, 3),
                                         Rational(2 * rng.range(-4, 4) + 1, 3)};
        };
        IndexCycle cycle{{rng.range(-2, 2), rng.range(-2, 2)}};
        auto a = vertex();
        auto b = vertex();
        auto c = vertex();
        LiftedPath whole;
        whole.points = {a, b, c};
        LiftedPath first, second;
        first.points = {a, b};
        second.points = {b, c};
        REQUIRE(path_intersection(whole, cycle) ==
                path_intersection(first, cycle) + path_intersection(second, cycle));

        // closed loop with prescribed winding (2w per coordinate), translated
        std::vector<Rational> winding{Rational(2 * rng.range(-2, 2)),
                                      Rational(2 * rng.range(-2, 2))};
        LiftedPath loop;
        std::vector<Rational> end{a[0] + winding[0], a[1] + winding[1]};
        loop.points = {a, b, end};
        std::vector<Rational> shift{Rational(rng.range(-5, 5), 7),
                                    Rational(rng.range(-5, 5), 7)};
        LiftedPath translated;
        for (const auto& point : loop.points)
            translated.points.push_back({point[0] + shift[0], point[1] + shift[1]});
        REQUIRE(path_intersection(loop, cycle) == path_intersection(translated, cycle));
    }
}
