#include "torus.hpp"

namespace czlab {

namespace {

bool on_wall(const Rational& coordinate) {
    // t_i in 2Z <=> z_i = 1.
    return is_integer(coordinate) && mpz_even_p(coordinate.get_num_mpz_t());
}

void require_elliptic_only(const PathDescriptor& d) {
    if (!d.is_elliptic_only())
        fail(Errc::not_elliptic,
             "operation requires a descriptor without loop and hyperbolic parts");
}

}  // namespace

IndexCycle index_cycle_of(const PathDescriptor& d) {
    IndexCycle cycle;
    cycle.weights.reserve(d.elliptic().size());
    for (const auto& e : d.elliptic()) cycle.weights.push_back(e.signature);
    return cycle;
}

TorusPoint eigenvalue_vector(const PathDescriptor& d, std::int64_t k) {
    if (k < 0) fail(Errc::invalid_argument, "iterate must be non-negative");
    if (k > d.horizon())
        fail(Errc::horizon_exceeded, "iterate " + std::to_string(k) + " exceeds horizon " +
                                         std::to_string(d.horizon()));
    TorusPoint point;
    point.coordinates.reserve(d.elliptic().size());
    for (const auto& e : d.elliptic())
        point.coordinates.push_back(mod_period(Rational(k) * e.angle.value, 2));
    return point;
}

LiftedPath lifted_arc(const PathDescriptor& d, std::int64_t k) {
    if (k < 1) fail(Errc::invalid_argument, "iterate must be positive");
    if (k + 1 > d.horizon())
        fail(Errc::horizon_exceeded, "arc at k = " + std::to_string(k) +
                                         " needs horizon >= " + std::to_string(k + 1) +
                                         ", have " + std::to_string(d.horizon()));
    LiftedPath path;
    path.points.resize(2);
    for (const auto& e : d.elliptic()) {
        path.points[0].push_back(Rational(k) * e.angle.value);
        path.points[1].push_back(Rational(k + 1) * e.angle.value);
    }
    return path;
}

std::int64_t path_intersection(const LiftedPath& path, const IndexCycle& cycle) {
    if (path.points.size() < 2) fail(Errc::invalid_argument, "path needs at least two vertices");
    const std::size_t r = cycle.weights.size();
    for (const auto& point : path.points)
        if (point.size() != r)
            fail(Errc::invalid_argument, "path vertex dimension does not match the cycle");

    // A segment inside a wall (coordinate constant and even) has no
    // well-defined crossing count; reject before the endpoint check so the
    // specific failure is reported.
    for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
        for (std::size_t i = 0; i < r; ++i) {
            const Rational& a = path.points[s][i];
            const Rational& b = path.points[s + 1][i];
            if (a == b && on_wall(a))
                fail(Errc::degenerate_segment,
                     "segment " + std::to_string(s) + " lies inside the wall of coordinate " +
                         std::to_string(i));
        }
    }
    for (const auto& point : path.points)
        for (std::size_t i = 0; i < r; ++i)
            if (on_wall(point[i]))
                fail(Errc::endpoint_on_cycle, "path vertex has coordinate " + std::to_string(i) +
                                                  " = " + rat_str(point[i]) + " on a wall");

    // On a straight segment each coordinate is monotone, so the signed wall
    // crossings telescope to floor(end/2) - floor(start/2).
    BigInt total = 0;
    for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
        for (std::size_t i = 0; i < r; ++i) {
            if (cycle.weights[i] == 0) continue;
            BigInt crossings =
                floor_of(path.points[s + 1][i] / 2) - floor_of(path.points[s][i] / 2);
            total += BigInt(cycle.weights[i]) * crossings;
        }
    }
    if (!total.fits_slong_p()) fail(Errc::internal, "intersection index exceeds 64 bits");
    return static_cast<std::int64_t>(total.get_si());
}

std::int64_t arc_intersection(const PathDescriptor& d, std::int64_t k) {
    require_elliptic_only(d);
    return path_intersection(lifted_arc(d, k), index_cycle_of(d));
}

IntersectDivisibilityReport verify_intersect_divisibility(const PathDescriptor& d, std::int64_t l,
                                                          std::int64_t k_max) {
    if (l < 1) fail(Errc::invalid_argument, "divisor l must be positive");
    require_elliptic_only(d);
    auto condition_b = check_condition_b(d, l);
    if (!condition_b.holds) {
        std::string what = "divisibility condition (b) fails for l = " + std::to_string(l);
        for (const auto& f : condition_b.failures) what += "; " + f;
        fail(Errc::hypothesis_not_met, what);
    }
    if (k_max < 1) fail(Errc::invalid_argument, "horizon must be positive");
    if (d.horizon() < k_max + 1)
        fail(Errc::horizon_exceeded, "iterated arcs to m = " + std::to_string(k_max) +
                                         " need a descriptor certified to " +
                                         std::to_string(k_max + 1));

    IntersectDivisibilityReport report;
    // <lambda^k A u ... u lambda^m A, T> telescopes over adjacent arcs.
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::int64_t k = 1; k <= k_max; ++k)
        prefix[static_cast<std::size_t>(k)] =
            prefix[static_cast<std::size_t>(k - 1)] + arc_intersection(d, k);
    for (std::int64_t k = 1; k <= k_max && report.passed; ++k) {
        for (std::int64_t m = k; m <= k_max; ++m) {
            ++report.arcs_checked;
            std::int64_t crossing =
                prefix[static_cast<std::size_t>(m)] - prefix[static_cast<std::size_t>(k - 1)];
            if (crossing % l != 0) {
                report.passed = false;
                report.first_violation = {k, m};
                report.details = "l = " + std::to_string(l) + " does not divide <arc[" +
                                 std::to_string(k) + ".." + std::to_string(m) +
                                 "], T> = " + std::to_string(crossing);
                break;
            }
        }
    }
    if (report.passed)
        report.details = "all iterated arcs up to K = " + std::to_string(k_max) +
                         " have intersection index divisible by " + std::to_string(l);
    return report;
}

}  // namespace czlab
