#include "rotation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace czlab {

namespace {

// First k >= 1 with k * diff integral: the reduced denominator.
std::int64_t first_integral_multiple(const Rational& diff) {
    BigInt den = diff.get_den();
    if (!den.fits_slong_p() || den.get_si() > kUnboundedHorizon) return kUnboundedHorizon + 1;
    return static_cast<std::int64_t>(den.get_si());
}

void require_nondegenerate(std::int64_t n, const std::vector<Rational>& angles,
                           std::int64_t k_max) {
    for (std::int64_t i = 0; i <= n; ++i) {
        for (std::int64_t j = i + 1; j <= n; ++j) {
            Rational diff = angles[static_cast<std::size_t>(j)] -
                            angles[static_cast<std::size_t>(i)];
            std::int64_t first = first_integral_multiple(diff);
            if (first <= k_max)
                fail(Errc::degenerate_rotation,
                     "k (a_" + std::to_string(j) + " - a_" + std::to_string(i) +
                         ") is integral at k = " + std::to_string(first) +
                         " <= horizon " + std::to_string(k_max));
        }
    }
}

struct Recap {
    std::vector<Rational> delta;            // indexed by label
    std::vector<std::int64_t> label_of_axis;
    std::vector<std::int64_t> axis_of_label;
};

// Per axis: trivially capped index mu_ring = sum over j != i of
// 2 floor(a_i - a_j) + 1, reduced into [-n, n] by multiples of 2(n+1); the
// same shift recaps the trivial mean index 2(n+1) a_i.
Recap recap_mean_indices(std::int64_t n, const std::vector<Rational>& angles) {
    const std::int64_t period = 2 * (n + 1);
    Recap out;
    out.delta.assign(static_cast<std::size_t>(n + 1), Rational(0));
    out.label_of_axis.assign(static_cast<std::size_t>(n + 1), -1);
    out.axis_of_label.assign(static_cast<std::size_t>(n + 1), -1);

    for (std::int64_t i = 0; i <= n; ++i) {
        std::int64_t mu_ring = 0;
        for (std::int64_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Rational diff = angles[static_cast<std::size_t>(i)] -
                            angles[static_cast<std::size_t>(j)];
            if (is_integer(diff))
                fail(Errc::degenerate_rotation,
                     "coincident eigenvalues modulo Z at axes " + std::to_string(i) + ", " +
                         std::to_string(j));
            mu_ring += 2 * floor_i64(diff) + 1;
        }
        // Unique representative of mu_ring mod 2(n+1) inside [-n, n]; n+1 is
        // excluded by parity (mu_ring has the parity of n).
        std::int64_t rem = (mu_ring + n) % period;
        if (rem < 0) rem += period;
        std::int64_t mu_capped = rem - n;
        if (mu_capped > n || (mu_capped - n) % 2 != 0)
            fail(Errc::recapping_failed, "no capped index of the right parity in [-n, n]");
        std::int64_t shift = (mu_ring - mu_capped) / period;
        std::int64_t label = (mu_capped + n) / 2;
        if (out.axis_of_label[static_cast<std::size_t>(label)] != -1)
            fail(Errc::recapping_failed,
                 "two fixed points recap to the same index " + std::to_string(mu_capped));
        out.axis_of_label[static_cast<std::size_t>(label)] = i;
        out.label_of_axis[static_cast<std::size_t>(i)] = label;
        Rational delta = Rational(period) * angles[static_cast<std::size_t>(i)] -
                         Rational(period) * shift;
        delta.canonicalize();
        out.delta[static_cast<std::size_t>(label)] = delta;
    }

    Rational sum(0);
    for (std::int64_t l = 0; l <= n; ++l) {
        const Rational& delta = out.delta[static_cast<std::size_t>(l)];
        if (rat_abs(delta - Rational(2 * l - n)) >= n)
            fail(Errc::recapping_failed, "capped mean index " + rat_str(delta) +
                                             " leaves the window around " +
                                             std::to_string(2 * l - n));
        if (l > 0 && out.delta[static_cast<std::size_t>(l - 1)] >= delta)
            fail(Errc::recapping_failed, "capped mean indices are not strictly increasing");
        sum += delta;
    }
    if (sum != 0)
        fail(Errc::recapping_failed, "capped mean indices sum to " + rat_str(sum) + ", not 0");
    return out;
}

}  // namespace

FixedPointTable FixedPointTable::create(std::int64_t n, std::vector<Rational> delta,
                                        std::vector<PathDescriptor> descriptors) {
    if (n < 1) fail(Errc::schema_error, "n must be a positive integer");
    if (delta.size() != static_cast<std::size_t>(n + 1))
        fail(Errc::schema_error, "delta must have n + 1 entries");
    if (!descriptors.empty() && descriptors.size() != static_cast<std::size_t>(n + 1))
        fail(Errc::schema_error, "descriptors must be absent or have n + 1 entries");
    for (std::int64_t l = 0; l <= n; ++l) {
        if (rat_abs(delta[static_cast<std::size_t>(l)] - Rational(2 * l - n)) >= n)
            fail(Errc::schema_error,
                 "delta[" + std::to_string(l) + "] = " +
                     rat_str(delta[static_cast<std::size_t>(l)]) +
                     " violates the mean-index window around " + std::to_string(2 * l - n));
        if (l > 0 &&
            delta[static_cast<std::size_t>(l - 1)] >= delta[static_cast<std::size_t>(l)])
            fail(Errc::schema_error, "delta must be strictly increasing");
    }
    FixedPointTable t;
    t.n = n;
    t.delta = std::move(delta);
    t.descriptors = std::move(descriptors);
    return t;
}

Rotation make_rotation(std::int64_t n, std::vector<Rational> raw_angles, std::int64_t k_max) {
    if (n < 1) fail(Errc::invalid_argument, "n must be a positive integer");
    if (raw_angles.size() != static_cast<std::size_t>(n + 1))
        fail(Errc::invalid_argument, "expected n + 1 eigenvalues");
    if (k_max < 1) fail(Errc::invalid_argument, "horizon must be positive");

    std::sort(raw_angles.begin(), raw_angles.end());
    Rational mean = std::accumulate(raw_angles.begin(), raw_angles.end(), Rational(0));
    mean /= Rational(n + 1);
    for (auto& a : raw_angles) {
        a -= mean;
        a.canonicalize();
    }
    require_nondegenerate(n, raw_angles, k_max);

    // Reduce to the canonical representative: the n+1 consecutive spectrum
    // points with sum zero, recovered through the recapping reduction. The
    // pairwise differences only change by integers, so non-degeneracy holds
    // for the reduced vector as well.
    Recap recap = recap_mean_indices(n, raw_angles);
    std::vector<Rational> canonical(static_cast<std::size_t>(n + 1));
    for (std::int64_t l = 0; l <= n; ++l) {
        canonical[static_cast<std::size_t>(l)] =
            recap.delta[static_cast<std::size_t>(l)] / Rational(2 * (n + 1));
        canonical[static_cast<std::size_t>(l)].canonicalize();
    }

    Rotation r;
    r.n = n;
    r.angles = std::move(canonical);
    r.horizon = k_max;
    return r;
}

std::vector<Rational> trivial_mean_indices(const Rotation& r) {
    std::vector<Rational> out;
    out.reserve(r.angles.size());
    for (const auto& a : r.angles) {
        Rational v = Rational(2 * (r.n + 1)) * a;
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

FixedPointTable recapped_fixed_points(const Rotation& r) {
    Recap recap = recap_mean_indices(r.n, r.angles);

    // Linearized flow at the point with label l: one elliptic pair per other
    // axis with signed short angle 2(a_i - a_j) mod 2, plus the even loop
    // part that accounts for the rest of the mean index.
    std::vector<PathDescriptor> descriptors;
    descriptors.reserve(static_cast<std::size_t>(r.n + 1));
    for (std::int64_t l = 0; l <= r.n; ++l) {
        std::int64_t axis = recap.axis_of_label[static_cast<std::size_t>(l)];
        std::vector<EllipticEntry> entries;
        Rational signed_angle_sum(0);
        for (std::int64_t j = 0; j <= r.n; ++j) {
            if (j == axis) continue;
            Rational beta = reduce_symmetric_mod2(
                Rational(2) * (r.angles[static_cast<std::size_t>(axis)] -
                               r.angles[static_cast<std::size_t>(j)]));
            if (beta == 0 || beta == 1)
                fail(Errc::degenerate_rotation, "Floquet multiplier on the real axis");
            signed_angle_sum += beta;
            EllipticEntry entry;
            entry.angle.value = rat_abs(beta);
            entry.multiplicity = 1;
            entry.signature = beta > 0 ? 1 : -1;
            entries.push_back(entry);
        }
        Rational loop_part = recap.delta[static_cast<std::size_t>(l)] - signed_angle_sum;
        loop_part.canonicalize();
        if (!is_integer(loop_part))
            fail(Errc::recapping_failed, "non-integral loop part " + rat_str(loop_part));
        descriptors.push_back(PathDescriptor::create(floor_i64(loop_part), 0, 0,
                                                     std::move(entries), r.horizon));
    }
    return FixedPointTable::create(r.n, recap.delta, std::move(descriptors));
}

MarkedSpectrum action_spectrum(const Rotation& r, const Rational& lo, const Rational& hi) {
    if (lo >= hi) fail(Errc::invalid_argument, "window is empty");
    for (std::int64_t i = 0; i <= r.n; ++i) {
        const Rational& a = r.angles[static_cast<std::size_t>(i)];
        if (is_integer(lo - a) || is_integer(hi - a))
            fail(Errc::window_bound_in_spectrum,
                 "window bound lies in the action spectrum of eigenvalue " + rat_str(a));
    }

    MarkedSpectrum spectrum;
    spectrum.n = r.n;
    for (std::int64_t i = 0; i <= r.n; ++i) {
        const Rational& a = r.angles[static_cast<std::size_t>(i)];
        // Bounds are off the spectrum, so both comparisons below are strict.
        std::int64_t m_lo = floor_i64(lo - a) + 1;
        std::int64_t m_hi = floor_i64(hi - a);
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            MarkedSpectrum::Entry entry;
            entry.label = i + m * (r.n + 1);
            entry.index = 2 * entry.label - r.n;
            entry.value = a + m;
            entry.value.canonicalize();
            spectrum.entries.push_back(std::move(entry));
        }
    }
    std::sort(spectrum.entries.begin(), spectrum.entries.end(),
              [](const auto& x, const auto& y) { return x.label < y.label; });
    for (std::size_t i = 1; i < spectrum.entries.size(); ++i) {
        if (spectrum.entries[i - 1].value == spectrum.entries[i].value)
            fail(Errc::duplicate_action,
                 "coincident action values at labels " +
                     std::to_string(spectrum.entries[i - 1].label) + " and " +
                     std::to_string(spectrum.entries[i].label));
        if (spectrum.entries[i - 1].value > spectrum.entries[i].value)
            fail(Errc::internal, "marked spectrum not monotone in the label");
    }
    return spectrum;
}

bool is_balanced(const FixedPointTable& t) {
    Rational sum = std::accumulate(t.delta.begin(), t.delta.end(), Rational(0));
    return sum == 0;
}

Rotation matching_rotation(const FixedPointTable& t, std::int64_t k_max) {
    if (!is_balanced(t))
        fail(Errc::not_balanced, "capped mean indices do not sum to zero");
    std::vector<Rational> raw;
    raw.reserve(t.delta.size());
    for (const auto& delta : t.delta) {
        Rational a = delta / Rational(2 * (t.n + 1));
        a.canonicalize();
        raw.push_back(a);
    }
    Rotation r = make_rotation(t.n, std::move(raw), k_max);
    if (recapped_fixed_points(r).delta != t.delta)
        fail(Errc::recapping_failed,
             "no true rotation realizes this table: the extended marked spectrum would not be "
             "monotone");
    return r;
}

std::vector<Rational> floquet_multipliers(const Rotation& r, std::int64_t i) {
    if (i < 0 || i > r.n) fail(Errc::invalid_argument, "point index out of range");
    std::vector<Rational> out;
    for (std::int64_t j = 0; j <= r.n; ++j) {
        if (j == i) continue;
        Rational beta = reduce_symmetric_mod2(Rational(2) *
                                              (r.angles[static_cast<std::size_t>(i)] -
                                               r.angles[static_cast<std::size_t>(j)]));
        if (beta == 0 || beta == 1)
            fail(Errc::degenerate_rotation,
                 "multiplier of points " + std::to_string(i) + ", " + std::to_string(j) +
                     " lies on the real axis");
        out.push_back(beta);
    }
    return out;
}

MatchingHypothesesReport check_matching_hypotheses(const FixedPointTable& t, std::int64_t k_max) {
    Rotation r = matching_rotation(t, k_max);
    MatchingHypothesesReport report;

    std::vector<std::vector<Rational>> signed_values(static_cast<std::size_t>(r.n + 1));
    std::vector<std::vector<Rational>> classes(static_cast<std::size_t>(r.n + 1));
    for (std::int64_t i = 0; i <= r.n; ++i) {
        signed_values[static_cast<std::size_t>(i)] = floquet_multipliers(r, i);
        std::string line = "point " + std::to_string(i) + ":";
        for (const auto& beta : signed_values[static_cast<std::size_t>(i)]) {
            classes[static_cast<std::size_t>(i)].push_back(rat_abs(beta));
            line += " " + rat_str(beta);
        }
        report.details.push_back(line);
    }

    report.within_point_distinct = true;
    for (auto& cs : classes) {
        auto sorted = cs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            report.within_point_distinct = false;
    }

    report.across_points_disjoint = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            for (const auto& c : classes[i]) {
                if (std::find(classes[j].begin(), classes[j].end(), c) != classes[j].end()) {
                    report.across_points_disjoint = false;
                    report.details.push_back("points " + std::to_string(i) + " and " +
                                             std::to_string(j) + " share the eigenvalue class ±" +
                                             rat_str(c));
                }
            }
        }
    }

    std::vector<Rational> all;
    for (const auto& vs : signed_values) all.insert(all.end(), vs.begin(), vs.end());
    std::sort(all.begin(), all.end());
    report.ordered_values_distinct =
        std::adjacent_find(all.begin(), all.end()) == all.end();

    report.holds = report.within_point_distinct && report.across_points_disjoint;
    return report;
}

std::vector<std::vector<std::int64_t>> resonance_lattice(const FixedPointTable& t,
                                                         std::int64_t bound) {
    if (bound < 1) fail(Errc::invalid_argument, "bound must be positive");
    const std::size_t dims = t.delta.size();
    const Rational period(2 * (t.n + 1));
    std::vector<std::vector<std::int64_t>> resonances;
    std::vector<std::int64_t> vec(dims, -bound);
    while (true) {
        bool all_zero = std::all_of(vec.begin(), vec.end(), [](auto v) { return v == 0; });
        if (!all_zero) {
            Rational sum(0);
            for (std::size_t i = 0; i < dims; ++i) sum += Rational(vec[i]) * t.delta[i];
            if (mod_period(sum, period) == 0) resonances.push_back(vec);
        }
        std::size_t pos = dims;
        while (pos > 0) {
            --pos;
            if (vec[pos] < bound) {
                ++vec[pos];
                for (std::size_t rest = pos + 1; rest < dims; ++rest) vec[rest] = -bound;
                break;
            }
            if (pos == 0) return resonances;
        }
    }
}

AntisymmetryReport s2_antisymmetry_check(const PathDescriptor& d0, const PathDescriptor& d1,
                                         std::int64_t k_max) {
    for (const PathDescriptor* d : {&d0, &d1}) {
        bool one_elliptic_pair = d->mult_minus_one() == 0 && d->hyperbolic_pairs() == 0 &&
                                 d->total_dimension() == 2 && !d->elliptic().empty();
        if (!one_elliptic_pair)
            fail(Errc::wrong_dimension,
                 "antisymmetry check needs elliptic descriptors of total dimension 2");
    }
    AntisymmetryReport report;
    report.mutual_inverses = (d1 == inverse(d0));
    report.mean_indices_opposite = (mean_index(d1) == -mean_index(d0));
    auto seq0 = index_sequence(d0, k_max);
    auto seq1 = index_sequence(d1, k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        std::int64_t mu0 = seq0[static_cast<std::size_t>(k - 1)];
        std::int64_t mu1 = seq1[static_cast<std::size_t>(k - 1)];
        if (mu1 != -mu0) {
            report.passed = false;
            report.first_violation = k;
            report.mu0 = mu0;
            report.mu1 = mu1;
            break;
        }
    }
    return report;
}

bool is_trivial_rotation_loop(const std::vector<Rational>& raw_angles) {
    if (raw_angles.size() < 2) fail(Errc::invalid_argument, "expected at least two eigenvalues");
    const auto count = static_cast<std::int64_t>(raw_angles.size());
    Rational mean = std::accumulate(raw_angles.begin(), raw_angles.end(), Rational(0));
    mean /= Rational(count);
    for (std::size_t i = 0; i < raw_angles.size(); ++i) {
        for (std::size_t j = i + 1; j < raw_angles.size(); ++j)
            if (!is_integer(raw_angles[i] - raw_angles[j])) return false;
        if (!is_integer(Rational(count) * (raw_angles[i] - mean))) return false;
    }
    return true;
}

}  // namespace czlab
