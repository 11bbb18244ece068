#include "json_io.hpp"

namespace czlab {

namespace {

std::int64_t get_int(const Json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(Errc::schema_error, std::string("missing or non-integer field '") + field + "'");
    return j[field].get<std::int64_t>();
}

Rational get_rational_string(const Json& j) {
    if (!j.is_string()) fail(Errc::schema_error, "rationals serialize as \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

std::int64_t fit_i64(const BigInt& v, const char* what) {
    if (!v.fits_slong_p())
        fail(Errc::schema_error, std::string(what) + " does not fit a 64-bit integer");
    return static_cast<std::int64_t>(v.get_si());
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON");
    return j;
}

Json descriptor_to_json(const PathDescriptor& d) {
    Json j;
    j["loop"] = d.loop();
    j["mult_minus_one"] = d.mult_minus_one();
    j["hyperbolic_pairs"] = d.hyperbolic_pairs();
    j["horizon"] = d.horizon();
    j["elliptic"] = Json::array();
    for (const auto& e : d.elliptic()) {
        Json entry;
        entry["theta_num"] = fit_i64(e.angle.value.get_num(), "theta_num");
        entry["theta_den"] = fit_i64(e.angle.value.get_den(), "theta_den");
        entry["multiplicity"] = e.multiplicity;
        entry["signature"] = e.signature;
        j["elliptic"].push_back(entry);
    }
    return j;
}

PathDescriptor descriptor_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::schema_error, "descriptor must be a JSON object");
    if (!j.contains("elliptic") || !j["elliptic"].is_array())
        fail(Errc::schema_error, "missing 'elliptic' array");
    std::vector<EllipticEntry> entries;
    for (const auto& e : j["elliptic"]) {
        std::int64_t num = get_int(e, "theta_num");
        std::int64_t den = get_int(e, "theta_den");
        if (den == 0) fail(Errc::schema_error, "theta_den must be nonzero");
        EllipticEntry entry;
        entry.angle.value = Rational(num, den);
        entry.angle.value.canonicalize();
        entry.multiplicity = get_int(e, "multiplicity");
        entry.signature = get_int(e, "signature");
        entries.push_back(entry);
    }
    return PathDescriptor::create(get_int(j, "loop"), get_int(j, "mult_minus_one"),
                                  get_int(j, "hyperbolic_pairs"), std::move(entries),
                                  get_int(j, "horizon"));
}

Json rotation_to_json(const Rotation& r) {
    Json j;
    j["n"] = r.n;
    j["horizon"] = r.horizon;
    j["angles"] = Json::array();
    for (const auto& a : r.angles) j["angles"].push_back(rat_str(a));
    return j;
}

Rotation rotation_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::schema_error, "rotation must be a JSON object");
    if (!j.contains("angles") || !j["angles"].is_array())
        fail(Errc::schema_error, "missing 'angles' array");
    std::vector<Rational> angles;
    for (const auto& a : j["angles"]) angles.push_back(get_rational_string(a));
    return make_rotation(get_int(j, "n"), std::move(angles), get_int(j, "horizon"));
}

Json table_to_json(const FixedPointTable& t) {
    Json j;
    j["n"] = t.n;
    j["delta"] = Json::array();
    for (const auto& d : t.delta) j["delta"].push_back(rat_str(d));
    if (!t.descriptors.empty()) {
        j["descriptors"] = Json::array();
        for (const auto& d : t.descriptors) j["descriptors"].push_back(descriptor_to_json(d));
    }
    return j;
}

FixedPointTable table_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::schema_error, "table must be a JSON object");
    if (!j.contains("delta") || !j["delta"].is_array())
        fail(Errc::schema_error, "missing 'delta' array");
    std::vector<Rational> delta;
    for (const auto& d : j["delta"]) delta.push_back(get_rational_string(d));
    std::vector<PathDescriptor> descriptors;
    if (j.contains("descriptors")) {
        if (!j["descriptors"].is_array()) fail(Errc::schema_error, "'descriptors' must be an array");
        for (const auto& d : j["descriptors"]) descriptors.push_back(descriptor_from_json(d));
    }
    return FixedPointTable::create(get_int(j, "n"), std::move(delta), std::move(descriptors));
}

Json lifted_path_to_json(const LiftedPath& p) {
    Json j;
    j["points"] = Json::array();
    for (const auto& point : p.points) {
        Json row = Json::array();
        for (const auto& c : point) row.push_back(rat_str(c));
        j["points"].push_back(row);
    }
    return j;
}

LiftedPath lifted_path_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        fail(Errc::schema_error, "path must be {\"points\": [[\"p/q\", ...], ...]}");
    LiftedPath path;
    for (const auto& row : j["points"]) {
        if (!row.is_array()) fail(Errc::schema_error, "path vertices must be arrays");
        std::vector<Rational> point;
        for (const auto& c : row) point.push_back(get_rational_string(c));
        path.points.push_back(std::move(point));
    }
    return path;
}

Json condition_b_to_json(const ConditionBReport& report) {
    Json j;
    j["holds"] = report.holds;
    j["failures"] = report.failures;
    return j;
}

Json intersect_report_to_json(const IntersectDivisibilityReport& report) {
    Json j;
    j["passed"] = report.passed;
    j["arcs_checked"] = report.arcs_checked;
    j["details"] = report.details;
    if (report.first_violation) {
        j["first_violation"] = {{"k", report.first_violation->first},
                                {"m", report.first_violation->second}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json antisymmetry_report_to_json(const AntisymmetryReport& report) {
    Json j;
    j["passed"] = report.passed;
    j["mutual_inverses"] = report.mutual_inverses;
    j["mean_indices_opposite"] = report.mean_indices_opposite;
    if (!report.passed) {
        j["first_violation"] = report.first_violation;
        j["mu0"] = report.mu0;
        j["mu1"] = report.mu1;
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json matching_hypotheses_to_json(const MatchingHypothesesReport& report) {
    Json j;
    j["holds"] = report.holds;
    j["within_point_distinct"] = report.within_point_distinct;
    j["across_points_disjoint"] = report.across_points_disjoint;
    j["ordered_values_distinct"] = report.ordered_values_distinct;
    j["details"] = report.details;
    return j;
}

std::string sequences_csv(const PathDescriptor& d, std::int64_t k_max) {
    auto mu = index_sequence(d, k_max);
    auto jumps = jump_sequence(d, k_max);
    std::string out = "k,mu,jump\n";
    for (std::int64_t k = 1; k <= k_max; ++k) {
        out += std::to_string(k);
        out += ',';
        out += std::to_string(mu[static_cast<std::size_t>(k - 1)]);
        out += ',';
        out += std::to_string(jumps[static_cast<std::size_t>(k - 1)]);
        out += '\n';
    }
    return out;
}

std::string spectrum_csv(const MarkedSpectrum& spectrum) {
    std::string out = "label,index,value\n";
    for (const auto& e : spectrum.entries) {
        out += std::to_string(e.label);
        out += ',';
        out += std::to_string(e.index);
        out += ',';
        out += rat_str(e.value);
        out += '\n';
    }
    return out;
}

}  // namespace czlab
