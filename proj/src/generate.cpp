#include "generate.hpp"

#include <algorithm>
#include <numeric>

namespace czlab {

namespace {

// One accepted instance per hundred attempts is the 99% rejection threshold.
constexpr std::int64_t kMaxAttemptsPerDraw = 100;

void account_rejection(std::int64_t& rejected, std::int64_t& attempts) {
    ++rejected;
    if (++attempts >= kMaxAttemptsPerDraw)
        fail(Errc::family_exhausted,
             "rejection rate exceeded 99%: " + std::to_string(attempts) +
                 " consecutive draws rejected");
}

}  // namespace

std::vector<std::int64_t> draw_numerators(SplitMix64& rng, std::int64_t q, std::int64_t count,
                                          std::int64_t min_numerator, bool odd_only) {
    std::vector<std::int64_t> eligible;
    for (std::int64_t p = min_numerator; p < q; ++p) {
        if (odd_only && p % 2 == 0) continue;
        if (std::gcd(p, q) != 1) continue;
        eligible.push_back(p);
    }
    if (static_cast<std::int64_t>(eligible.size()) < count) return {};
    // Partial Fisher-Yates over the eligible list.
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < count; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(eligible.size() - i));
        std::swap(eligible[static_cast<std::size_t>(i)], eligible[j]);
        out.push_back(eligible[static_cast<std::size_t>(i)]);
    }
    return out;
}

PathDescriptor draw_descriptor(SplitMix64& rng, const DescriptorFamily& family,
                               std::int64_t& rejected) {
    std::int64_t attempts = 0;
    while (true) {
        std::int64_t q = rng.range(family.den_min, family.den_max);
        std::int64_t entries = rng.range(family.min_entries, family.max_entries);
        auto numerators = draw_numerators(rng, q, entries, family.min_numerator,
                                          family.odd_numerators);
        if (entries > 0 && numerators.empty()) {
            account_rejection(rejected, attempts);
            continue;
        }
        std::vector<EllipticEntry> elliptic;
        std::int64_t horizon = kUnboundedHorizon;
        for (std::int64_t p : numerators) {
            EllipticEntry entry;
            entry.angle.value = Rational(p, q);
            entry.angle.value.canonicalize();
            entry.multiplicity = rng.range(1, family.max_multiplicity);
            // signature with the parity of the multiplicity
            entry.signature = entry.multiplicity - 2 * rng.range(0, entry.multiplicity);
            if (!family.allow_zero_signature && entry.signature == 0)
                entry.signature = rng.range(0, 1) == 0 ? -entry.multiplicity
                                                       : entry.multiplicity;
            horizon = std::min(horizon, first_degenerate_iterate(entry.angle.value) - 1);
            elliptic.push_back(entry);
        }
        std::int64_t loop = 2 * rng.range(-family.loop_half_range, family.loop_half_range);
        std::int64_t m1 = rng.range(0, family.max_mult_minus_one);
        std::int64_t hyp = rng.range(0, family.max_hyperbolic_pairs);
        return PathDescriptor::create(loop, m1, hyp, std::move(elliptic), horizon);
    }
}

Rotation draw_rotation(SplitMix64& rng, const RotationFamily& family, std::int64_t& rejected) {
    if (family.denominators.empty())
        fail(Errc::invalid_argument, "rotation family needs candidate denominators");
    std::int64_t attempts = 0;
    while (true) {
        std::int64_t n = rng.range(family.n_min, family.n_max);
        std::int64_t q = family.denominators[rng.below(family.denominators.size())];
        std::vector<Rational> raw;
        raw.reserve(static_cast<std::size_t>(n + 1));
        for (std::int64_t i = 0; i <= n; ++i) {
            raw.emplace_back(rng.range(-family.coefficient_range, family.coefficient_range), q);
            raw.back().canonicalize();
        }
        try {
            return make_rotation(n, std::move(raw), family.horizon);
        } catch (const Error& e) {
            if (e.code() != Errc::degenerate_rotation) throw;
            account_rejection(rejected, attempts);
        }
    }
}

GeneratedDescriptors generate_descriptors(std::uint64_t seed, const DescriptorFamily& family) {
    if (family.count < 1) fail(Errc::invalid_argument, "count must be positive");
    SplitMix64 rng(seed);
    GeneratedDescriptors out;
    for (std::int64_t i = 0; i < family.count; ++i)
        out.instances.push_back(draw_descriptor(rng, family, out.rejected_draws));
    return out;
}

GeneratedRotations generate_rotations(std::uint64_t seed, const RotationFamily& family) {
    if (family.count < 1) fail(Errc::invalid_argument, "count must be positive");
    SplitMix64 rng(seed);
    GeneratedRotations out;
    for (std::int64_t i = 0; i < family.count; ++i)
        out.instances.push_back(draw_rotation(rng, family, out.rejected_draws));
    return out;
}

}  // namespace czlab
