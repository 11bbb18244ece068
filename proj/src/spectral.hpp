#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace czlab {

// Logarithmic eigenvalue theta in (0,1): the unit eigenvalue is
// exp(pi*i*theta). `horizon` is the iteration range over which the rational
// value faithfully models a strongly non-degenerate (irrational) angle,
// i.e. no k <= horizon has k*theta/2 integral.
struct Angle {
    Rational value;
    std::int64_t horizon = 1;
};

// First iterate k >= 1 with k*theta/2 integral: 2*den if the numerator is
// odd, den otherwise. Clamped to kUnboundedHorizon + 1 for huge denominators.
std::int64_t first_degenerate_iterate(const Rational& theta);

// One conjugate eigenvalue pair class of the elliptic block: the angle, how
// many pairs share it, and the Krein signature p - q of those pairs.
struct EllipticEntry {
    Angle angle;
    std::int64_t multiplicity = 1;
    std::int64_t signature = 0;
};

// The complete iteration-determining invariant set of a strongly
// non-degenerate symplectic path: loop mean index, negative-hyperbolic
// multiplicity, positive-hyperbolic pair count (index-inert, dimension
// bookkeeping only) and the decorated elliptic spectrum.
//
// Instances are immutable and always satisfy the type invariants: loop even,
// counts non-negative, elliptic entries sorted by strictly increasing angle
// (equal angles merged), |signature| <= multiplicity with matching parity,
// and no angle degenerate within `horizon`.
class PathDescriptor {
public:
    // Canonicalizes (sorts and merges entries) and validates for `horizon`.
    // Throws OddLoopError, SignatureParityError, NonDegeneracyViolation or
    // InvalidArgument.
    static PathDescriptor create(std::int64_t loop, std::int64_t mult_minus_one,
                                 std::int64_t hyperbolic_pairs,
                                 std::vector<EllipticEntry> elliptic, std::int64_t horizon);

    static PathDescriptor empty() { return create(0, 0, 0, {}, kUnboundedHorizon); }

    std::int64_t loop() const { return loop_; }
    std::int64_t mult_minus_one() const { return mult_minus_one_; }
    std::int64_t hyperbolic_pairs() const { return hyperbolic_pairs_; }
    const std::vector<EllipticEntry>& elliptic() const { return elliptic_; }
    std::int64_t horizon() const { return horizon_; }

    std::int64_t total_dimension() const;
    bool is_elliptic_only() const {
        return loop_ == 0 && mult_minus_one_ == 0 && hyperbolic_pairs_ == 0;
    }
    // Weakly non-degenerate: some eigenvalue differs from 1.
    bool is_weakly_nondegenerate() const { return !elliptic_.empty() || mult_minus_one_ > 0; }

    // Largest horizon this spectrum can be certified for.
    std::int64_t max_certifiable_horizon() const;

    bool operator==(const PathDescriptor& o) const;

private:
    PathDescriptor() = default;

    std::int64_t loop_ = 0;
    std::int64_t mult_minus_one_ = 0;
    std::int64_t hyperbolic_pairs_ = 0;
    std::vector<EllipticEntry> elliptic_;
    std::int64_t horizon_ = kUnboundedHorizon;
};

// Re-certifies d for horizon K (NonDegeneracyViolation if some k <= K is
// degenerate); the returned descriptor carries horizon K.
PathDescriptor validate_descriptor(const PathDescriptor& d, std::int64_t k_max);

// a(k) = floor((k+1)theta/2) - floor(k*theta/2), in {0,1}. Requires
// k >= 1 and k + 1 <= angle.horizon.
int jump_a(const Angle& angle, std::int64_t k);

// mu(Phi) = loop + mult_{-1} + sum of signatures.
std::int64_t cz_index(const PathDescriptor& d);

// Mean index: loop + mult_{-1} + sum of signature * theta.
Rational mean_index(const PathDescriptor& d);

// Jump sequence mu'_1..mu'_K, mu'_k = loop + mult_{-1} + 2 sum a(k) sgn.
// Requires horizon >= K + 1.
std::vector<std::int64_t> jump_sequence(const PathDescriptor& d, std::int64_t k_max);

// Index sequence mu_1..mu_K. Computed in closed form,
//   mu_k = k (loop + mult_{-1}) + sum_lambda sgn * (2 floor(k theta/2) + 1),
// an independent route from jump_sequence; the prefix-sum identity between
// the two is a tested invariant. Requires horizon >= K.
std::vector<std::int64_t> index_sequence(const PathDescriptor& d, std::int64_t k_max);

// Invariants are additive under direct sum; shared angles merge.
PathDescriptor direct_sum(const PathDescriptor& a, const PathDescriptor& b);

// Signatures and loop + mult_{-1} change sign; mult_minus_one is kept
// non-negative by pushing the flip into loop (loop' = -loop - 2 mult_{-1}).
PathDescriptor inverse(const PathDescriptor& d);

struct ConditionBReport {
    bool holds = true;
    std::vector<std::string> failures;
};

// Divisibility condition (b): 2l | (loop + mult_{-1}) and l | sgn_lambda for
// every elliptic entry.
ConditionBReport check_condition_b(const PathDescriptor& d, std::int64_t l);

struct ConditionAResult {
    bool holds_up_to_k = true;
    std::int64_t witness = 0;  // first k with 2l not dividing mu'_k; 0 if none
};

// Scans mu'_1..mu'_K for the first jump not divisible by 2l. Requires
// horizon >= K + 1.
ConditionAResult check_condition_a(const PathDescriptor& d, std::int64_t l, std::int64_t k_max);

struct ReconstructResult {
    enum class Outcome { match, no_match, ambiguous };
    Outcome outcome = Outcome::no_match;
    std::optional<std::size_t> index;  // set when outcome == match
};

// Identifies the unique pool member whose jump sequence over the full jump
// horizon equals `jumps`. Every pool member must be certified for
// jumps.size() + 1.
ReconstructResult reconstruct_from_jumps(const std::vector<std::int64_t>& jumps,
                                         const std::vector<PathDescriptor>& pool);

// (loop + mult_{-1}, decorated spectrum): the exact data the index sequence
// determines (zero-signature entries invisible).
using DecoratedKey = std::pair<std::int64_t, std::vector<std::pair<Rational, std::int64_t>>>;
DecoratedKey decorated_key(const PathDescriptor& d);

}  // namespace czlab
