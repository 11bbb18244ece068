#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "generate.hpp"
#include "torus.hpp"

namespace czlab {

namespace {

constexpr std::int64_t kScanCap = 500;

// Scan range usable for index values of a certified descriptor.
std::int64_t index_scan_range(const PathDescriptor& d, std::int64_t cap) {
    return std::min(cap, d.horizon() - 1);
}

void record_failure(SuiteResult& result, std::int64_t trial, const Json& instance,
                    const std::string& what) {
    ++result.failed;
    if (result.violation.is_null()) {
        result.violation = Json{{"trial", trial}, {"instance", instance}, {"reason", what}};
    }
}

// --- oracle -----------------------------------------------------------------

DescriptorFamily oracle_family() {
    DescriptorFamily f;
    f.den_min = 5;
    f.den_max = 100;
    f.min_entries = 0;
    f.max_entries = 4;
    return f;
}

bool check_oracle_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    DescriptorFamily family = oracle_family();
    PathDescriptor d = draw_descriptor(rng, family, result.rejected_draws);
    std::int64_t k_max = index_scan_range(d, kScanCap);
    auto mu = index_sequence(d, k_max);
    auto jumps = jump_sequence(d, k_max);

    if (mu[0] != cz_index(d)) {
        record_failure(result, trial, descriptor_to_json(d), "mu_1 != cz_index");
        return false;
    }
    // Closed-form route vs. jump-accumulation route.
    for (std::int64_t k = 1; k < k_max; ++k) {
        if (mu[static_cast<std::size_t>(k)] !=
            mu[static_cast<std::size_t>(k - 1)] + jumps[static_cast<std::size_t>(k - 1)]) {
            record_failure(result, trial, descriptor_to_json(d),
                           "prefix-sum mismatch at k = " + std::to_string(k + 1));
            return false;
        }
    }

    // Single positive elliptic pair: mu_k = 2 floor(k theta / 2) + 1.
    std::int64_t q = rng.range(5, 100);
    auto nums = draw_numerators(rng, q, 1, 1, true);
    if (nums.empty()) return true;  // q admits no odd coprime numerator (cannot happen for q>=5)
    Rational theta(nums[0], q);
    theta.canonicalize();
    PathDescriptor sp = PathDescriptor::create(
        0, 0, 0, {EllipticEntry{{theta, 1}, 1, 1}}, first_degenerate_iterate(theta) - 1);
    std::int64_t sp_range = index_scan_range(sp, kScanCap);
    auto sp_mu = index_sequence(sp, sp_range);
    for (std::int64_t k = 1; k <= sp_range; ++k) {
        std::int64_t expected = 2 * floor_i64(Rational(k) * theta / 2) + 1;
        if (sp_mu[static_cast<std::size_t>(k - 1)] != expected) {
            record_failure(result, trial, descriptor_to_json(sp),
                           "closed form fails at k = " + std::to_string(k));
            return false;
        }
    }
    return true;
}

// --- index divisibility theorem ----------------------------------------------

// Descriptor with condition (b) true for l: signatures and multiplicities
// scaled by l, loop + mult_minus_one a multiple of 2l.
PathDescriptor make_condition_b_true(SplitMix64& rng, std::int64_t l,
                                     std::int64_t& rejected) {
    while (true) {
        std::int64_t q = rng.range(5, 100);
        std::int64_t entries = rng.range(0, 3);
        auto nums = draw_numerators(rng, q, entries, 1, true);
        if (entries > 0 && nums.empty()) {
            ++rejected;
            continue;
        }
        std::vector<EllipticEntry> elliptic;
        std::int64_t horizon = kUnboundedHorizon;
        for (std::int64_t p : nums) {
            std::int64_t m_hat = rng.range(1, 2);
            std::int64_t s_hat = m_hat - 2 * rng.range(0, m_hat);
            EllipticEntry e;
            e.angle.value = Rational(p, q);
            e.angle.value.canonicalize();
            e.multiplicity = l * m_hat;
            e.signature = l * s_hat;
            horizon = std::min(horizon, first_degenerate_iterate(e.angle.value) - 1);
            elliptic.push_back(e);
        }
        std::int64_t m1 = 2 * rng.range(0, 1);
        std::int64_t loop = 2 * l * rng.range(-2, 2) - m1;
        return PathDescriptor::create(loop, m1, 0, std::move(elliptic), horizon);
    }
}

// Descriptor with condition (b) false for l. Flavor A violates (i) through
// loop + mult_minus_one (witness at k = 1), flavor B violates (ii) with a
// single odd-numerator >= 3 entry whose first jump stays inside the
// certified window. l = 1 admits only flavor A.
PathDescriptor make_condition_b_false(SplitMix64& rng, std::int64_t l, bool prefer_entry_flavor,
                                      std::int64_t& rejected) {
    bool flavor_b = prefer_entry_flavor && l >= 2;
    if (!flavor_b) {
        std::int64_t m1, loop;
        if (l == 1) {
            m1 = 1 + 2 * rng.range(0, 1);
            loop = 2 * rng.range(-3, 3);
        } else {
            std::int64_t v = 2 * l * rng.range(-1, 1) + 2 * rng.range(1, l - 1);
            m1 = 2 * rng.range(0, 1);
            loop = v - m1;
        }
        // Optional zero-signature entries; invisible to condition (ii).
        std::int64_t q = rng.range(5, 100);
        std::int64_t entries = rng.range(0, 2);
        auto nums = draw_numerators(rng, q, entries, 1, true);
        std::vector<EllipticEntry> elliptic;
        std::int64_t horizon = kUnboundedHorizon;
        for (std::int64_t p : nums) {
            EllipticEntry e;
            e.angle.value = Rational(p, q);
            e.angle.value.canonicalize();
            e.multiplicity = 2;
            e.signature = 0;
            horizon = std::min(horizon, first_degenerate_iterate(e.angle.value) - 1);
            elliptic.push_back(e);
        }
        return PathDescriptor::create(loop, m1, rng.range(0, 2), std::move(elliptic), horizon);
    }

    while (true) {
        std::int64_t q = rng.range(5, 100);
        auto nums = draw_numerators(rng, q, 1, 3, true);
        if (nums.empty()) {
            ++rejected;
            continue;
        }
        std::int64_t m = (l == 2) ? 1 : rng.range(1, 2);
        std::int64_t s = (rng.range(0, 1) == 0 ? -m : m);  // l does not divide s

        EllipticEntry e;
        e.angle.value = Rational(nums[0], q);
        e.angle.value.canonicalize();
        e.multiplicity = m;
        e.signature = s;
        std::int64_t horizon = first_degenerate_iterate(e.angle.value) - 1;
        std::int64_t loop = 2 * l * rng.range(-1, 1);
        return PathDescriptor::create(loop, 0, 0, {e}, horizon);
    }
}

std::int64_t common_denominator(const PathDescriptor& d) {
    BigInt lcm = 1;
    for (const auto& e : d.elliptic()) {
        BigInt den = e.angle.value.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    if (!lcm.fits_slong_p()) fail(Errc::internal, "common denominator overflow");
    return static_cast<std::int64_t>(lcm.get_si());
}

bool check_forward_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    for (std::int64_t l = 1; l <= 12; ++l) {
        PathDescriptor d = make_condition_b_true(rng, l, result.rejected_draws);
        if (!check_condition_b(d, l).holds) {
            record_failure(result, trial, descriptor_to_json(d),
                           "generator produced a condition-(b)-false instance");
            return false;
        }
        std::int64_t k_max = index_scan_range(d, kScanCap);
        auto res = check_condition_a(d, l, k_max);
        if (!res.holds_up_to_k) {
            record_failure(result, trial, descriptor_to_json(d),
                           "(b) holds but 2l does not divide mu'_k at k = " +
                               std::to_string(res.witness) + " for l = " + std::to_string(l));
            return false;
        }
    }
    return true;
}

bool check_converse_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    for (std::int64_t l = 1; l <= 12; ++l) {
        bool prefer_entry = (trial + l) % 2 == 0;
        PathDescriptor d = make_condition_b_false(rng, l, prefer_entry, result.rejected_draws);
        if (check_condition_b(d, l).holds) {
            record_failure(result, trial, descriptor_to_json(d),
                           "generator produced a condition-(b)-true instance");
            return false;
        }
        std::int64_t bound = 4 * l * common_denominator(d);
        std::int64_t k_search = std::min(bound, d.horizon() - 1);
        auto res = check_condition_a(d, l, k_search);
        if (res.holds_up_to_k) {
            record_failure(result, trial, descriptor_to_json(d),
                           "witness search exhausted for l = " + std::to_string(l) +
                               " up to K = " + std::to_string(k_search));
            return false;
        }
        if (res.witness > bound) {
            record_failure(result, trial, descriptor_to_json(d),
                           "witness " + std::to_string(res.witness) + " beyond the 4l*den bound");
            return false;
        }
    }
    return true;
}

// --- reconstruction -----------------------------------------------------------

bool check_reconstruct_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    std::int64_t q = rng.range(5, 100);
    auto eligible = draw_numerators(rng, q, 1, 3, true);
    if (eligible.empty()) {
        ++result.rejected_draws;
        return true;  // resample on the next trial; q >= 5 always has one
    }
    std::int64_t size = rng.range(2, 10);

    std::vector<PathDescriptor> pool;
    std::set<DecoratedKey> keys;
    std::int64_t attempts = 0;
    while (static_cast<std::int64_t>(pool.size()) < size && attempts < 200) {
        ++attempts;
        auto nums = draw_numerators(rng, q, 1, 3, true);
        if (nums.empty()) break;
        std::int64_t m = rng.range(1, 3);
        std::int64_t s = m - 2 * rng.range(0, m);
        if (s == 0) s = (rng.range(0, 1) == 0 ? -m : m);
        std::int64_t loop = 2 * rng.range(-2, 2);
        std::int64_t m1 = rng.range(0, 2);
        EllipticEntry e;
        e.angle.value = Rational(nums[0], q);
        e.angle.value.canonicalize();
        e.multiplicity = m;
        e.signature = s;
        PathDescriptor d = PathDescriptor::create(
            loop, m1, rng.range(0, 1), {e}, first_degenerate_iterate(e.angle.value) - 1);
        auto key = decorated_key(d);
        if (!keys.insert(key).second) {
            ++result.rejected_draws;
            continue;
        }
        pool.push_back(std::move(d));
    }
    if (static_cast<std::int64_t>(pool.size()) < 2) {
        ++result.rejected_draws;
        return true;
    }

    std::int64_t k_cmp = std::min(4 * q, 2 * q - 2);
    auto generator_index = static_cast<std::size_t>(rng.below(pool.size()));
    auto jumps = jump_sequence(pool[generator_index], k_cmp);

    auto res = reconstruct_from_jumps(jumps, pool);
    if (res.outcome != ReconstructResult::Outcome::match || res.index != generator_index) {
        record_failure(result, trial, descriptor_to_json(pool[generator_index]),
                       "reconstruction did not identify the generator uniquely");
        return false;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (jump_sequence(pool[i], k_cmp) == jump_sequence(pool[j], k_cmp)) {
                record_failure(result, trial, descriptor_to_json(pool[i]),
                               "pool members " + std::to_string(i) + ", " + std::to_string(j) +
                                   " agree on the full comparison window");
                return false;
            }
        }
    }
    return true;
}

// --- torus intersection ---------------------------------------------------------

bool check_intersect_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    DescriptorFamily family;
    family.den_min = 101;
    family.den_max = 140;
    family.min_entries = 1;
    family.max_entries = 4;
    family.loop_half_range = 0;
    family.max_mult_minus_one = 0;
    family.max_hyperbolic_pairs = 0;
    PathDescriptor d = draw_descriptor(rng, family, result.rejected_draws);

    std::int64_t k_max = index_scan_range(d, kScanCap);
    auto jumps = jump_sequence(d, k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (2 * arc_intersection(d, k) != jumps[static_cast<std::size_t>(k - 1)]) {
            record_failure(result, trial, descriptor_to_json(d),
                           "2<arc,T> != mu'_k at k = " + std::to_string(k));
            return false;
        }
    }

    // Condition-(b)-satisfying variant: scale the decoration by l.
    std::int64_t l = rng.range(1, 6);
    std::vector<EllipticEntry> scaled = d.elliptic();
    for (auto& e : scaled) {
        e.multiplicity *= l;
        e.signature *= l;
    }
    PathDescriptor db = PathDescriptor::create(0, 0, 0, std::move(scaled), d.horizon());
    std::int64_t arc_range = std::min<std::int64_t>(200, db.horizon() - 1);
    auto report = verify_intersect_divisibility(db, l, arc_range);
    if (!report.passed) {
        record_failure(result, trial, descriptor_to_json(db),
                       "iterated arc divisibility failed: " + report.details);
        return false;
    }
    return true;
}

// --- rotations -------------------------------------------------------------------

bool check_rotation_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    RotationFamily family;
    Rotation r = draw_rotation(rng, family, result.rejected_draws);
    FixedPointTable table = recapped_fixed_points(r);

    Rational sum(0);
    for (const auto& delta : table.delta) sum += delta;
    if (sum != 0) {
        record_failure(result, trial, rotation_to_json(r), "recapped mean indices sum to " +
                                                               rat_str(sum));
        return false;
    }
    Rotation matched = matching_rotation(table, r.horizon);
    if (!(matched == r)) {
        record_failure(result, trial, rotation_to_json(r),
                       "matching rotation round trip changed the angle vector");
        return false;
    }

    auto trivial = trivial_mean_indices(r);
    Rational trivial_sum(0);
    for (const auto& v : trivial) trivial_sum += v;
    if (trivial_sum != 0) {
        record_failure(result, trial, rotation_to_json(r), "trivial mean indices do not sum to 0");
        return false;
    }

    for (std::int64_t l = 0; l <= r.n; ++l) {
        const auto& desc = table.descriptors[static_cast<std::size_t>(l)];
        if (cz_index(desc) != 2 * l - r.n || mean_index(desc) != table.delta[static_cast<std::size_t>(l)]) {
            record_failure(result, trial, rotation_to_json(r),
                           "per-point linearized descriptor disagrees with the table at label " +
                               std::to_string(l));
            return false;
        }
    }

    // Multipliers vs. mean indices: the unreduced values sum to the trivial
    // mean index, and each reduced multiplier agrees modulo 2.
    for (std::int64_t i = 0; i <= r.n; ++i) {
        auto reduced = floquet_multipliers(r, i);
        Rational unreduced_sum(0);
        std::size_t pos = 0;
        for (std::int64_t j = 0; j <= r.n; ++j) {
            if (j == i) continue;
            Rational unreduced = Rational(2) * (r.angles[static_cast<std::size_t>(i)] -
                                                r.angles[static_cast<std::size_t>(j)]);
            unreduced_sum += unreduced;
            if (mod_period(unreduced - reduced[pos], 2) != 0) {
                record_failure(result, trial, rotation_to_json(r),
                               "reduced multiplier differs from 2(a_i - a_j) modulo 2");
                return false;
            }
            ++pos;
        }
        if (unreduced_sum != trivial[static_cast<std::size_t>(i)]) {
            record_failure(result, trial, rotation_to_json(r),
                           "signed multipliers do not sum to the trivial mean index");
            return false;
        }
    }

    // Marked spectrum over a window with bounds off the spectrum (prime
    // denominator 7919 never divides the spectrum denominators here).
    Rational lo = Rational(-2) - Rational(1, 7919);
    Rational hi = Rational(2) + Rational(1, 7919);
    MarkedSpectrum spectrum = action_spectrum(r, lo, hi);
    for (std::size_t i = 0; i < spectrum.entries.size(); ++i) {
        const auto& e = spectrum.entries[i];
        if (i > 0) {
            if (e.label != spectrum.entries[i - 1].label + 1 ||
                e.value <= spectrum.entries[i - 1].value) {
                record_failure(result, trial, rotation_to_json(r),
                               "marked spectrum is not strictly increasing and contiguous");
                return false;
            }
        }
        if (e.label >= 0 && e.label <= r.n &&
            e.value != r.angles[static_cast<std::size_t>(e.label)]) {
            record_failure(result, trial, rotation_to_json(r),
                           "labels 0..n do not carry the eigenvalues");
            return false;
        }
        if (e.index != 2 * e.label - r.n) {
            record_failure(result, trial, rotation_to_json(r), "label/index mismatch");
            return false;
        }
    }
    for (const auto& e : spectrum.entries) {
        for (const auto& f : spectrum.entries) {
            if (f.label == e.label + r.n + 1 && f.value != e.value + 1) {
                record_failure(result, trial, rotation_to_json(r),
                               "lattice periodicity value(l + n + 1) = value(l) + 1 fails");
                return false;
            }
        }
    }
    return true;
}

// --- mean index bound ---------------------------------------------------------------

bool check_mean_bound_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    DescriptorFamily family;
    family.den_min = 251;
    family.den_max = 320;
    family.min_entries = 1;
    family.max_entries = 4;
    PathDescriptor d = draw_descriptor(rng, family, result.rejected_draws);

    std::int64_t k_max = index_scan_range(d, kScanCap);
    auto mu = index_sequence(d, k_max);
    Rational hmu = mean_index(d);
    Rational half_dim(d.total_dimension() / 2);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rational diff = Rational(mu[static_cast<std::size_t>(k - 1)]) - Rational(k) * hmu;
        if (rat_abs(diff) >= half_dim) {
            record_failure(result, trial, descriptor_to_json(d),
                           "|mu_k - k hmu| >= n at k = " + std::to_string(k));
            return false;
        }
    }

    // Positive-hyperbolic block only: equality is permitted.
    PathDescriptor hyp = PathDescriptor::create(0, 0, rng.range(0, 3), {}, kUnboundedHorizon);
    auto hyp_mu = index_sequence(hyp, 10);
    for (std::int64_t k = 1; k <= 10; ++k) {
        Rational diff = Rational(hyp_mu[static_cast<std::size_t>(k - 1)]) -
                        Rational(k) * mean_index(hyp);
        if (rat_abs(diff) > Rational(hyp.total_dimension() / 2)) {
            record_failure(result, trial, descriptor_to_json(hyp),
                           "|mu_k - k hmu| > n for a positive-hyperbolic block");
            return false;
        }
    }
    return true;
}

// --- antisymmetry -------------------------------------------------------------------

PathDescriptor draw_two_dim_elliptic(SplitMix64& rng, std::int64_t q, std::int64_t p,
                                     std::int64_t signature) {
    EllipticEntry e;
    e.angle.value = Rational(p, q);
    e.angle.value.canonicalize();
    e.multiplicity = 1;
    e.signature = signature;
    return PathDescriptor::create(2 * rng.range(-2, 2), 0, 0, {e},
                                  first_degenerate_iterate(e.angle.value) - 1);
}

bool check_antisymmetry_trial(SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
    std::int64_t q = rng.range(251, 320);
    if (trial % 2 == 0) {
        auto nums = draw_numerators(rng, q, 1, 1, true);
        if (nums.empty()) {
            ++result.rejected_draws;
            return true;
        }
        PathDescriptor d0 = draw_two_dim_elliptic(rng, q, nums[0], rng.range(0, 1) == 0 ? 1 : -1);
        PathDescriptor d1 = inverse(d0);
        auto report = s2_antisymmetry_check(d0, d1, std::min<std::int64_t>(kScanCap, d0.horizon()));
        if (!report.passed || !report.mutual_inverses) {
            record_failure(result, trial, descriptor_to_json(d0),
                           "inverse pair violates mu_k(d1) = -mu_k(d0) at k = " +
                               std::to_string(report.first_violation));
            return false;
        }
        return true;
    }

    auto nums = draw_numerators(rng, q, 2, 1, true);
    if (nums.size() < 2) {
        ++result.rejected_draws;
        return true;
    }
    PathDescriptor d0 = draw_two_dim_elliptic(rng, q, nums[0], rng.range(0, 1) == 0 ? 1 : -1);
    PathDescriptor d1 = draw_two_dim_elliptic(rng, q, nums[1], rng.range(0, 1) == 0 ? 1 : -1);
    std::int64_t bound = 4 * common_denominator(direct_sum(d0, d1));
    std::int64_t k_search = std::min(bound, std::min(d0.horizon(), d1.horizon()));
    auto report = s2_antisymmetry_check(d0, d1, k_search);
    if (report.passed) {
        record_failure(result, trial, descriptor_to_json(d0),
                       "no antisymmetry violation found for a non-inverse pair up to K = " +
                           std::to_string(k_search));
        return false;
    }
    if (report.first_violation > bound) {
        record_failure(result, trial, descriptor_to_json(d0),
                       "violation index beyond the 4*den bound");
        return false;
    }
    return true;
}

using TrialCheck = std::function<bool(SplitMix64&, std::int64_t, SuiteResult&)>;

SuiteResult run_trials(const std::string& name, std::uint64_t seed, std::int64_t trials,
                       const TrialCheck& check) {
    if (trials < 1) fail(Errc::invalid_argument, "trials must be positive");
    SuiteResult result;
    result.suite = name;
    result.seed = seed;
    result.trials = trials;
    SplitMix64 rng(seed);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        if (check(rng, trial, result)) ++result.passed;
    }
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "oracle",    "theorem-forward", "theorem-converse", "theorem",     "reconstruct",
        "intersect", "rotation",        "mean-bound",       "antisymmetry"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials) {
    if (name == "oracle") return run_trials(name, seed, trials, check_oracle_trial);
    if (name == "theorem-forward") return run_trials(name, seed, trials, check_forward_trial);
    if (name == "theorem-converse") return run_trials(name, seed, trials, check_converse_trial);
    if (name == "theorem")
        return run_trials(name, seed, trials,
                          [](SplitMix64& rng, std::int64_t trial, SuiteResult& result) {
                              bool fwd = check_forward_trial(rng, trial, result);
                              bool conv = check_converse_trial(rng, trial, result);
                              return fwd && conv;
                          });
    if (name == "reconstruct") return run_trials(name, seed, trials, check_reconstruct_trial);
    if (name == "intersect") return run_trials(name, seed, trials, check_intersect_trial);
    if (name == "rotation") return run_trials(name, seed, trials, check_rotation_trial);
    if (name == "mean-bound") return run_trials(name, seed, trials, check_mean_bound_trial);
    if (name == "antisymmetry") return run_trials(name, seed, trials, check_antisymmetry_trial);
    fail(Errc::invalid_argument, "unknown suite '" + name + "'");
}

Json suite_result_to_json(const SuiteResult& result) {
    Json j;
    j["suite"] = result.suite;
    j["seed"] = result.seed;
    j["trials"] = result.trials;
    j["passed"] = result.passed;
    j["failed"] = result.failed;
    j["rejected_draws"] = result.rejected_draws;
    j["violation"] = result.violation;
    return j;
}

}  // namespace czlab
