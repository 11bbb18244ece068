#pragma once

#include <cstdint>
#include <vector>

#include "rotation.hpp"
#include "spectral.hpp"

namespace czlab {

// Deterministic 64-bit generator (splitmix64). The stdlib distributions are
// not byte-reproducible across implementations, so all draws go through the
// explicit helpers below.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Common-denominator elliptic families. All angles are p/q with gcd(p,q)=1
// over one q drawn from [den_min, den_max]; odd numerators keep the whole
// spectrum non-degenerate up to 2q - 1, which is the horizon the generated
// descriptors are certified for.
struct DescriptorFamily {
    std::int64_t count = 1;
    std::int64_t min_entries = 0;
    std::int64_t max_entries = 4;
    std::int64_t den_min = 5;
    std::int64_t den_max = 100;
    std::int64_t min_numerator = 1;
    bool odd_numerators = true;
    std::int64_t max_multiplicity = 3;
    std::int64_t loop_half_range = 3;  // loop drawn from 2 * [-range, range]
    std::int64_t max_mult_minus_one = 2;
    std::int64_t max_hyperbolic_pairs = 2;
    bool allow_zero_signature = true;
};

struct RotationFamily {
    std::int64_t count = 1;
    std::int64_t n_min = 1;
    std::int64_t n_max = 5;
    // Candidate common denominators; primes above the horizon make every
    // distinct-residue draw non-degenerate.
    std::vector<std::int64_t> denominators = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    std::int64_t coefficient_range = 300;
    std::int64_t horizon = 16;
};

struct GeneratedDescriptors {
    std::vector<PathDescriptor> instances;
    std::int64_t rejected_draws = 0;
};

struct GeneratedRotations {
    std::vector<Rotation> instances;
    std::int64_t rejected_draws = 0;
};

// Draws `family.count` validated instances; degenerate draws are resampled
// and counted, FamilyExhausted when the rejection rate passes 99%.
GeneratedDescriptors generate_descriptors(std::uint64_t seed, const DescriptorFamily& family);
GeneratedRotations generate_rotations(std::uint64_t seed, const RotationFamily& family);

// Single draws on an external rng stream (used by the suites).
PathDescriptor draw_descriptor(SplitMix64& rng, const DescriptorFamily& family,
                               std::int64_t& rejected);
Rotation draw_rotation(SplitMix64& rng, const RotationFamily& family, std::int64_t& rejected);

// Distinct numerators coprime to q (odd when requested), at least
// `min_numerator`; empty when q admits fewer than `count` of them.
std::vector<std::int64_t> draw_numerators(SplitMix64& rng, std::int64_t q, std::int64_t count,
                                          std::int64_t min_numerator, bool odd_only);

}  // namespace czlab
