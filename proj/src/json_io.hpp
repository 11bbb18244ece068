#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "rotation.hpp"
#include "spectral.hpp"
#include "torus.hpp"

namespace czlab {

using Json = nlohmann::json;

// Descriptor schema:
// {"loop": int, "mult_minus_one": int, "hyperbolic_pairs": int,
//  "elliptic": [{"theta_num": int, "theta_den": int, "multiplicity": int,
//                "signature": int}], "horizon": int}
Json descriptor_to_json(const PathDescriptor& d);
PathDescriptor descriptor_from_json(const Json& j);

// Rotation schema: {"n": int, "angles": ["p/q", ...], "horizon": int}
Json rotation_to_json(const Rotation& r);
Rotation rotation_from_json(const Json& j);

// Table schema: {"n": int, "delta": ["p/q", ...], "descriptors": optional}
Json table_to_json(const FixedPointTable& t);
FixedPointTable table_from_json(const Json& j);

// Path schema: {"points": [["p/q", ...], ...]}
Json lifted_path_to_json(const LiftedPath& p);
LiftedPath lifted_path_from_json(const Json& j);

Json condition_b_to_json(const ConditionBReport& report);
Json intersect_report_to_json(const IntersectDivisibilityReport& report);
Json antisymmetry_report_to_json(const AntisymmetryReport& report);
Json matching_hypotheses_to_json(const MatchingHypothesesReport& report);

// CSV with mandatory header "k,mu,jump", rows k = 1..K. Needs the descriptor
// certified to K + 1 (the jump column reaches iterate K + 1).
std::string sequences_csv(const PathDescriptor& d, std::int64_t k_max);

// CSV with header "label,index,value".
std::string spectrum_csv(const MarkedSpectrum& spectrum);

// Parses text as JSON, mapping malformed input to ParseError.
Json parse_json_text(const std::string& text);

}  // namespace czlab
