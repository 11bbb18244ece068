#pragma once

#include <stdexcept>
#include <string>

namespace czlab {

// Error codes, one per failure mode named in the module contracts. The C API
// exposes the same taxonomy as CZL_ERR_* status values.
enum class Errc {
    none = 0,
    parse_error,
    schema_error,
    invalid_argument,
    nondegeneracy_violation,
    signature_parity,
    odd_loop,
    horizon_exceeded,
    not_elliptic,
    endpoint_on_cycle,
    degenerate_segment,
    hypothesis_not_met,
    degenerate_rotation,
    not_balanced,
    recapping_failed,
    duplicate_action,
    window_bound_in_spectrum,
    wrong_dimension,
    family_exhausted,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::none: return "ok";
        case Errc::parse_error: return "ParseError";
        case Errc::schema_error: return "SchemaError";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::nondegeneracy_violation: return "NonDegeneracyViolation";
        case Errc::signature_parity: return "SignatureParityError";
        case Errc::odd_loop: return "OddLoopError";
        case Errc::horizon_exceeded: return "HorizonExceeded";
        case Errc::not_elliptic: return "NotElliptic";
        case Errc::endpoint_on_cycle: return "EndpointOnCycle";
        case Errc::degenerate_segment: return "DegenerateSegment";
        case Errc::hypothesis_not_met: return "HypothesisNotMet";
        case Errc::degenerate_rotation: return "DegenerateRotation";
        case Errc::not_balanced: return "NotBalanced";
        case Errc::recapping_failed: return "RecappingFailed";
        case Errc::duplicate_action: return "DuplicateAction";
        case Errc::window_bound_in_spectrum: return "WindowBoundInSpectrum";
        case Errc::wrong_dimension: return "WrongDimension";
        case Errc::family_exhausted: return "FamilyExhausted";
        case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace czlab
