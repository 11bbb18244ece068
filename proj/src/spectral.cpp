#include "spectral.hpp"

#include <algorithm>

namespace czlab {

std::int64_t first_degenerate_iterate(const Rational& theta) {
    // theta = p/q reduced, k*theta/2 integral iff 2q | kp iff (2q/gcd(p,2)) | k.
    BigInt first = theta.get_den() * 2;
    if (mpz_even_p(theta.get_num_mpz_t())) first = theta.get_den();
    if (!first.fits_slong_p() || first.get_si() > kUnboundedHorizon)
        return kUnboundedHorizon + 1;
    return static_cast<std::int64_t>(first.get_si());
}

PathDescriptor PathDescriptor::create(std::int64_t loop, std::int64_t mult_minus_one,
                                      std::int64_t hyperbolic_pairs,
                                      std::vector<EllipticEntry> elliptic,
                                      std::int64_t horizon) {
    if (loop % 2 != 0)
        fail(Errc::odd_loop, "loop mean index must be even, got " + std::to_string(loop));
    if (mult_minus_one < 0 || hyperbolic_pairs < 0)
        fail(Errc::invalid_argument, "mult_minus_one and hyperbolic_pairs must be non-negative");
    if (horizon < 1) fail(Errc::invalid_argument, "horizon must be positive");

    for (auto& e : elliptic) {
        if (e.angle.value <= 0 || e.angle.value >= 1)
            fail(Errc::invalid_argument,
                 "logarithmic eigenvalue must lie in (0,1), got " + rat_str(e.angle.value));
        if (e.multiplicity < 1)
            fail(Errc::invalid_argument, "multiplicity must be positive");
    }

    std::sort(elliptic.begin(), elliptic.end(), [](const EllipticEntry& a, const EllipticEntry& b) {
        return a.angle.value < b.angle.value;
    });
    // Duplicate angles merge; signature and multiplicity are additive.
    std::vector<EllipticEntry> merged;
    for (auto& e : elliptic) {
        if (!merged.empty() && merged.back().angle.value == e.angle.value) {
            merged.back().multiplicity += e.multiplicity;
            merged.back().signature += e.signature;
        } else {
            merged.push_back(e);
        }
    }

    for (auto& e : merged) {
        if (std::abs(e.signature) > e.multiplicity)
            fail(Errc::signature_parity,
                 "signature " + std::to_string(e.signature) + " exceeds multiplicity " +
                     std::to_string(e.multiplicity) + " at angle " + rat_str(e.angle.value));
        if ((e.signature - e.multiplicity) % 2 != 0)
            fail(Errc::signature_parity,
                 "signature and multiplicity must have equal parity at angle " +
                     rat_str(e.angle.value));
        std::int64_t first = first_degenerate_iterate(e.angle.value);
        if (first <= horizon)
            fail(Errc::nondegeneracy_violation,
                 "angle " + rat_str(e.angle.value) + " degenerates at k = " +
                     std::to_string(first) + " <= horizon " + std::to_string(horizon));
        e.angle.horizon = horizon;
    }

    PathDescriptor d;
    d.loop_ = loop;
    d.mult_minus_one_ = mult_minus_one;
    d.hyperbolic_pairs_ = hyperbolic_pairs;
    d.elliptic_ = std::move(merged);
    d.horizon_ = horizon;
    return d;
}

std::int64_t PathDescriptor::total_dimension() const {
    std::int64_t pairs = hyperbolic_pairs_ + mult_minus_one_;
    for (const auto& e : elliptic_) pairs += e.multiplicity;
    return 2 * pairs;
}

std::int64_t PathDescriptor::max_certifiable_horizon() const {
    std::int64_t h = kUnboundedHorizon;
    for (const auto& e : elliptic_)
        h = std::min(h, first_degenerate_iterate(e.angle.value) - 1);
    return h;
}

bool PathDescriptor::operator==(const PathDescriptor& o) const {
    if (loop_ != o.loop_ || mult_minus_one_ != o.mult_minus_one_ ||
        hyperbolic_pairs_ != o.hyperbolic_pairs_ || elliptic_.size() != o.elliptic_.size())
        return false;
    for (std::size_t i = 0; i < elliptic_.size(); ++i) {
        if (elliptic_[i].angle.value != o.elliptic_[i].angle.value ||
            elliptic_[i].multiplicity != o.elliptic_[i].multiplicity ||
            elliptic_[i].signature != o.elliptic_[i].signature)
            return false;
    }
    return true;
}

PathDescriptor validate_descriptor(const PathDescriptor& d, std::int64_t k_max) {
    return PathDescriptor::create(d.loop(), d.mult_minus_one(), d.hyperbolic_pairs(), d.elliptic(),
                                  k_max);
}

namespace {

// floor(k * theta / 2) for theta = p/q: fdiv(k*p, 2*q).
BigInt floor_half_multiple(const Rational& theta, std::int64_t k) {
    BigInt num = theta.get_num() * k;
    BigInt den = theta.get_den() * 2;
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

std::int64_t require_i64(const BigInt& v) {
    if (!v.fits_slong_p()) fail(Errc::internal, "index value exceeds 64 bits");
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace

int jump_a(const Angle& angle, std::int64_t k) {
    if (k < 1) fail(Errc::invalid_argument, "iteration index must be positive");
    if (k + 1 > angle.horizon)
        fail(Errc::horizon_exceeded, "jump at k = " + std::to_string(k) +
                                         " needs horizon >= " + std::to_string(k + 1) +
                                         ", have " + std::to_string(angle.horizon));
    BigInt diff = floor_half_multiple(angle.value, k + 1) - floor_half_multiple(angle.value, k);
    return static_cast<int>(diff.get_si());
}

std::int64_t cz_index(const PathDescriptor& d) {
    std::int64_t mu = d.loop() + d.mult_minus_one();
    for (const auto& e : d.elliptic()) mu += e.signature;
    return mu;
}

Rational mean_index(const PathDescriptor& d) {
    Rational mu(d.loop() + d.mult_minus_one());
    for (const auto& e : d.elliptic()) mu += Rational(e.signature) * e.angle.value;
    mu.canonicalize();
    return mu;
}

std::vector<std::int64_t> jump_sequence(const PathDescriptor& d, std::int64_t k_max) {
    if (k_max < 1) fail(Errc::invalid_argument, "horizon must be positive");
    if (d.horizon() < k_max + 1)
        fail(Errc::horizon_exceeded,
             "jump sequence to K = " + std::to_string(k_max) + " needs a descriptor certified to " +
                 std::to_string(k_max + 1) + ", have " + std::to_string(d.horizon()));
    std::int64_t base = d.loop() + d.mult_minus_one();
    std::vector<std::int64_t> values(static_cast<std::size_t>(k_max), base);
    for (const auto& e : d.elliptic()) {
        if (e.signature == 0) continue;
        BigInt prev = floor_half_multiple(e.angle.value, 1);
        for (std::int64_t k = 1; k <= k_max; ++k) {
            BigInt next = floor_half_multiple(e.angle.value, k + 1);
            if (next != prev) values[static_cast<std::size_t>(k - 1)] += 2 * e.signature;
            prev = next;
        }
    }
    return values;
}

std::vector<std::int64_t> index_sequence(const PathDescriptor& d, std::int64_t k_max) {
    if (k_max < 1) fail(Errc::invalid_argument, "horizon must be positive");
    if (d.horizon() < k_max)
        fail(Errc::horizon_exceeded,
             "index sequence to K = " + std::to_string(k_max) +
                 " needs a descriptor certified to K, have " + std::to_string(d.horizon()));
    std::int64_t base = d.loop() + d.mult_minus_one();
    std::vector<std::int64_t> values(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 1; k <= k_max; ++k) values[static_cast<std::size_t>(k - 1)] = base * k;
    for (const auto& e : d.elliptic()) {
        if (e.signature == 0) continue;
        for (std::int64_t k = 1; k <= k_max; ++k) {
            BigInt f = floor_half_multiple(e.angle.value, k);
            values[static_cast<std::size_t>(k - 1)] +=
                e.signature * (2 * require_i64(f) + 1);
        }
    }
    return values;
}

PathDescriptor direct_sum(const PathDescriptor& a, const PathDescriptor& b) {
    std::vector<EllipticEntry> entries = a.elliptic();
    entries.insert(entries.end(), b.elliptic().begin(), b.elliptic().end());
    return PathDescriptor::create(a.loop() + b.loop(), a.mult_minus_one() + b.mult_minus_one(),
                                  a.hyperbolic_pairs() + b.hyperbolic_pairs(), std::move(entries),
                                  std::min(a.horizon(), b.horizon()));
}

PathDescriptor inverse(const PathDescriptor& d) {
    std::vector<EllipticEntry> entries = d.elliptic();
    for (auto& e : entries) e.signature = -e.signature;
    return PathDescriptor::create(-d.loop() - 2 * d.mult_minus_one(), d.mult_minus_one(),
                                  d.hyperbolic_pairs(), std::move(entries), d.horizon());
}

ConditionBReport check_condition_b(const PathDescriptor& d, std::int64_t l) {
    if (l < 1) fail(Errc::invalid_argument, "divisor l must be positive");
    ConditionBReport report;
    std::int64_t base = d.loop() + d.mult_minus_one();
    if (base % (2 * l) != 0) {
        report.holds = false;
        report.failures.push_back("2l = " + std::to_string(2 * l) +
                                  " does not divide loop + mult_minus_one = " +
                                  std::to_string(base));
    }
    for (const auto& e : d.elliptic()) {
        if (e.signature % l != 0) {
            report.holds = false;
            report.failures.push_back("l = " + std::to_string(l) +
                                      " does not divide signature " +
                                      std::to_string(e.signature) + " at angle " +
                                      rat_str(e.angle.value));
        }
    }
    return report;
}

ConditionAResult check_condition_a(const PathDescriptor& d, std::int64_t l, std::int64_t k_max) {
    if (l < 1) fail(Errc::invalid_argument, "divisor l must be positive");
    auto jumps = jump_sequence(d, k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (jumps[static_cast<std::size_t>(k - 1)] % (2 * l) != 0)
            return {false, k};
    }
    return {true, 0};
}

ReconstructResult reconstruct_from_jumps(const std::vector<std::int64_t>& jumps,
                                         const std::vector<PathDescriptor>& pool) {
    if (jumps.empty()) fail(Errc::invalid_argument, "jump sequence is empty");
    auto k_max = static_cast<std::int64_t>(jumps.size());
    ReconstructResult result;
    std::size_t matches = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (jump_sequence(pool[i], k_max) == jumps) {
            ++matches;
            if (matches == 1) {
                result.outcome = ReconstructResult::Outcome::match;
                result.index = i;
            } else {
                result.outcome = ReconstructResult::Outcome::ambiguous;
                result.index.reset();
                return result;
            }
        }
    }
    return result;
}

DecoratedKey decorated_key(const PathDescriptor& d) {
    DecoratedKey key;
    key.first = d.loop() + d.mult_minus_one();
    for (const auto& e : d.elliptic())
        if (e.signature != 0) key.second.emplace_back(e.angle.value, e.signature);
    return key;
}

}  // namespace czlab
