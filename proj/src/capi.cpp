#include "czlab/czlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "generate.hpp"
#include "json_io.hpp"
#include "suites.hpp"
#include "torus.hpp"

struct czl_descriptor {
    czlab::PathDescriptor value;
};
struct czl_rotation {
    czlab::Rotation value;
};
struct czl_table {
    czlab::FixedPointTable value;
};

namespace {

thread_local std::string g_last_error;

czl_status status_of(czlab::Errc code) {
    using czlab::Errc;
    switch (code) {
        case Errc::none: return CZL_OK;
        case Errc::parse_error: return CZL_ERR_PARSE;
        case Errc::schema_error: return CZL_ERR_SCHEMA;
        case Errc::invalid_argument: return CZL_ERR_INVALID_ARGUMENT;
        case Errc::nondegeneracy_violation: return CZL_ERR_NONDEGENERACY;
        case Errc::signature_parity: return CZL_ERR_SIGNATURE_PARITY;
        case Errc::odd_loop: return CZL_ERR_ODD_LOOP;
        case Errc::horizon_exceeded: return CZL_ERR_HORIZON;
        case Errc::not_elliptic: return CZL_ERR_NOT_ELLIPTIC;
        case Errc::endpoint_on_cycle: return CZL_ERR_ENDPOINT_ON_CYCLE;
        case Errc::degenerate_segment: return CZL_ERR_DEGENERATE_SEGMENT;
        case Errc::hypothesis_not_met: return CZL_ERR_HYPOTHESIS_NOT_MET;
        case Errc::degenerate_rotation: return CZL_ERR_DEGENERATE_ROTATION;
        case Errc::not_balanced: return CZL_ERR_NOT_BALANCED;
        case Errc::recapping_failed: return CZL_ERR_RECAPPING;
        case Errc::duplicate_action: return CZL_ERR_DUPLICATE_ACTION;
        case Errc::window_bound_in_spectrum: return CZL_ERR_WINDOW_BOUND;
        case Errc::wrong_dimension: return CZL_ERR_WRONG_DIMENSION;
        case Errc::family_exhausted: return CZL_ERR_FAMILY_EXHAUSTED;
        case Errc::internal: return CZL_ERR_INTERNAL;
    }
    return CZL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes and recording the message.
template <typename Fn>
czl_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CZL_OK;
    } catch (const czlab::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CZL_ERR_INTERNAL;
    }
}

czl_status require(bool ok, const char* what) {
    if (ok) return CZL_OK;
    g_last_error = what;
    return CZL_ERR_INVALID_ARGUMENT;
}

czlab::DescriptorFamily descriptor_family_from_json(const czlab::Json& j) {
    czlab::DescriptorFamily f;
    auto pick = [&j](const char* key, std::int64_t& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::int64_t>();
    };
    pick("count", f.count);
    pick("min_entries", f.min_entries);
    pick("max_entries", f.max_entries);
    pick("den_min", f.den_min);
    pick("den_max", f.den_max);
    pick("min_numerator", f.min_numerator);
    pick("max_multiplicity", f.max_multiplicity);
    pick("loop_half_range", f.loop_half_range);
    pick("max_mult_minus_one", f.max_mult_minus_one);
    pick("max_hyperbolic_pairs", f.max_hyperbolic_pairs);
    if (j.contains("odd_numerators")) f.odd_numerators = j.at("odd_numerators").get<bool>();
    if (j.contains("allow_zero_signature"))
        f.allow_zero_signature = j.at("allow_zero_signature").get<bool>();
    return f;
}

czlab::RotationFamily rotation_family_from_json(const czlab::Json& j) {
    czlab::RotationFamily f;
    auto pick = [&j](const char* key, std::int64_t& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::int64_t>();
    };
    pick("count", f.count);
    pick("n_min", f.n_min);
    pick("n_max", f.n_max);
    pick("coefficient_range", f.coefficient_range);
    pick("horizon", f.horizon);
    if (j.contains("denominators"))
        f.denominators = j.at("denominators").get<std::vector<std::int64_t>>();
    return f;
}

}  // namespace

extern "C" {

const char* czl_version(void) { return "0.1.0"; }

const char* czl_last_error(void) { return g_last_error.c_str(); }

void czl_string_free(char* s) { std::free(s); }

const char* czl_status_name(czl_status status) {
    switch (status) {
        case CZL_OK: return "ok";
        case CZL_ERR_PARSE: return "ParseError";
        case CZL_ERR_SCHEMA: return "SchemaError";
        case CZL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CZL_ERR_NONDEGENERACY: return "NonDegeneracyViolation";
        case CZL_ERR_SIGNATURE_PARITY: return "SignatureParityError";
        case CZL_ERR_ODD_LOOP: return "OddLoopError";
        case CZL_ERR_HORIZON: return "HorizonExceeded";
        case CZL_ERR_NOT_ELLIPTIC: return "NotElliptic";
        case CZL_ERR_ENDPOINT_ON_CYCLE: return "EndpointOnCycle";
        case CZL_ERR_DEGENERATE_SEGMENT: return "DegenerateSegment";
        case CZL_ERR_HYPOTHESIS_NOT_MET: return "HypothesisNotMet";
        case CZL_ERR_DEGENERATE_ROTATION: return "DegenerateRotation";
        case CZL_ERR_NOT_BALANCED: return "NotBalanced";
        case CZL_ERR_RECAPPING: return "RecappingFailed";
        case CZL_ERR_DUPLICATE_ACTION: return "DuplicateAction";
        case CZL_ERR_WINDOW_BOUND: return "WindowBoundInSpectrum";
        case CZL_ERR_WRONG_DIMENSION: return "WrongDimension";
        case CZL_ERR_FAMILY_EXHAUSTED: return "FamilyExhausted";
        case CZL_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownError";
}

czl_status czl_descriptor_parse(const char* json, czl_descriptor** out) {
    if (auto st = require(json && out, "null argument")) return st;
    return guarded([&] {
        auto parsed = czlab::descriptor_from_json(czlab::parse_json_text(json));
        *out = new czl_descriptor{std::move(parsed)};
    });
}

czl_status czl_descriptor_to_json(const czl_descriptor* d, char** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(czlab::descriptor_to_json(d->value).dump()); });
}

void czl_descriptor_free(czl_descriptor* d) { delete d; }

czl_status czl_descriptor_validate(const czl_descriptor* d, int64_t k_max,
                                   czl_descriptor** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] {
        *out = new czl_descriptor{czlab::validate_descriptor(d->value, k_max)};
    });
}

czl_status czl_descriptor_horizon(const czl_descriptor* d, int64_t* out) {
    if (auto st = require(d && out, "null argument")) return st;
    *out = d->value.horizon();
    return CZL_OK;
}

czl_status czl_descriptor_total_dimension(const czl_descriptor* d, int64_t* out) {
    if (auto st = require(d && out, "null argument")) return st;
    *out = d->value.total_dimension();
    return CZL_OK;
}

czl_status czl_cz_index(const czl_descriptor* d, int64_t* out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = czlab::cz_index(d->value); });
}

czl_status czl_mean_index(const czl_descriptor* d, char** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(czlab::rat_str(czlab::mean_index(d->value))); });
}

czl_status czl_jump_a(const char* theta, int64_t horizon, int64_t k, int* out) {
    if (auto st = require(theta && out, "null argument")) return st;
    return guarded([&] {
        czlab::Rational value = czlab::parse_rational(theta);
        if (value <= 0 || value >= 1)
            czlab::fail(czlab::Errc::invalid_argument,
                        "logarithmic eigenvalue must lie in (0,1)");
        std::int64_t first = czlab::first_degenerate_iterate(value);
        if (first <= horizon)
            czlab::fail(czlab::Errc::nondegeneracy_violation,
                        "angle degenerates at k = " + std::to_string(first));
        *out = czlab::jump_a(czlab::Angle{value, horizon}, k);
    });
}

czl_status czl_index_sequence(const czl_descriptor* d, int64_t k_max, int64_t* values) {
    if (auto st = require(d && values, "null argument")) return st;
    return guarded([&] {
        auto seq = czlab::index_sequence(d->value, k_max);
        std::memcpy(values, seq.data(), seq.size() * sizeof(int64_t));
    });
}

czl_status czl_jump_sequence(const czl_descriptor* d, int64_t k_max, int64_t* values) {
    if (auto st = require(d && values, "null argument")) return st;
    return guarded([&] {
        auto seq = czlab::jump_sequence(d->value, k_max);
        std::memcpy(values, seq.data(), seq.size() * sizeof(int64_t));
    });
}

czl_status czl_sequences_csv(const czl_descriptor* d, int64_t k_max, char** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(czlab::sequences_csv(d->value, k_max)); });
}

czl_status czl_direct_sum(const czl_descriptor* a, const czl_descriptor* b,
                          czl_descriptor** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        *out = new czl_descriptor{czlab::direct_sum(a->value, b->value)};
    });
}

czl_status czl_inverse(const czl_descriptor* d, czl_descriptor** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = new czl_descriptor{czlab::inverse(d->value)}; });
}

czl_status czl_check_condition_b(const czl_descriptor* d, int64_t l, int* holds,
                                 char** report_json) {
    if (auto st = require(d && holds, "null argument")) return st;
    return guarded([&] {
        auto report = czlab::check_condition_b(d->value, l);
        *holds = report.holds ? 1 : 0;
        if (report_json) *report_json = dup_string(czlab::condition_b_to_json(report).dump());
    });
}

czl_status czl_check_condition_a(const czl_descriptor* d, int64_t l, int64_t k_max, int* holds,
                                 int64_t* witness) {
    if (auto st = require(d && holds && witness, "null argument")) return st;
    return guarded([&] {
        auto res = czlab::check_condition_a(d->value, l, k_max);
        *holds = res.holds_up_to_k ? 1 : 0;
        *witness = res.witness;
    });
}

czl_status czl_reconstruct(const int64_t* jumps, int64_t count,
                           const czl_descriptor* const* pool, size_t pool_len, int* outcome,
                           size_t* match_index) {
    if (auto st = require(jumps && pool && outcome && match_index, "null argument")) return st;
    return guarded([&] {
        std::vector<std::int64_t> jump_values(jumps, jumps + count);
        std::vector<czlab::PathDescriptor> descriptors;
        descriptors.reserve(pool_len);
        for (size_t i = 0; i < pool_len; ++i) {
            if (pool[i] == nullptr) czlab::fail(czlab::Errc::invalid_argument, "null pool member");
            descriptors.push_back(pool[i]->value);
        }
        auto res = czlab::reconstruct_from_jumps(jump_values, descriptors);
        switch (res.outcome) {
            case czlab::ReconstructResult::Outcome::match: *outcome = CZL_RECONSTRUCT_MATCH; break;
            case czlab::ReconstructResult::Outcome::no_match:
                *outcome = CZL_RECONSTRUCT_NO_MATCH;
                break;
            case czlab::ReconstructResult::Outcome::ambiguous:
                *outcome = CZL_RECONSTRUCT_AMBIGUOUS;
                break;
        }
        *match_index = res.index.value_or(0);
    });
}

czl_status czl_eigenvalue_vector(const czl_descriptor* d, int64_t k, char** out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] {
        auto point = czlab::eigenvalue_vector(d->value, k);
        czlab::Json j;
        j["coordinates"] = czlab::Json::array();
        for (const auto& c : point.coordinates) j["coordinates"].push_back(czlab::rat_str(c));
        *out = dup_string(j.dump());
    });
}

czl_status czl_arc_intersection(const czl_descriptor* d, int64_t k, int64_t* out) {
    if (auto st = require(d && out, "null argument")) return st;
    return guarded([&] { *out = czlab::arc_intersection(d->value, k); });
}

czl_status czl_path_intersection(const char* path_json, const int64_t* weights, size_t count,
                                 int64_t* out) {
    if (auto st = require(path_json && weights && out, "null argument")) return st;
    return guarded([&] {
        auto path = czlab::lifted_path_from_json(czlab::parse_json_text(path_json));
        czlab::IndexCycle cycle;
        cycle.weights.assign(weights, weights + count);
        *out = czlab::path_intersection(path, cycle);
    });
}

czl_status czl_verify_intersect_divisibility(const czl_descriptor* d, int64_t l, int64_t k_max,
                                             int* passed, char** report_json) {
    if (auto st = require(d && passed, "null argument")) return st;
    return guarded([&] {
        auto report = czlab::verify_intersect_divisibility(d->value, l, k_max);
        *passed = report.passed ? 1 : 0;
        if (report_json) *report_json = dup_string(czlab::intersect_report_to_json(report).dump());
    });
}

czl_status czl_rotation_make(int64_t n, const char* const* angles, size_t count, int64_t k_max,
                             czl_rotation** out) {
    if (auto st = require(angles && out, "null argument")) return st;
    return guarded([&] {
        std::vector<czlab::Rational> values;
        values.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (angles[i] == nullptr) czlab::fail(czlab::Errc::invalid_argument, "null angle");
            values.push_back(czlab::parse_rational(angles[i]));
        }
        *out = new czl_rotation{czlab::make_rotation(n, std::move(values), k_max)};
    });
}

czl_status czl_rotation_parse(const char* json, czl_rotation** out) {
    if (auto st = require(json && out, "null argument")) return st;
    return guarded([&] {
        *out = new czl_rotation{czlab::rotation_from_json(czlab::parse_json_text(json))};
    });
}

czl_status czl_rotation_to_json(const czl_rotation* r, char** out) {
    if (auto st = require(r && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(czlab::rotation_to_json(r->value).dump()); });
}

void czl_rotation_free(czl_rotation* r) { delete r; }

czl_status czl_trivial_mean_indices(const czl_rotation* r, char** json_array) {
    if (auto st = require(r && json_array, "null argument")) return st;
    return guarded([&] {
        czlab::Json j = czlab::Json::array();
        for (const auto& v : czlab::trivial_mean_indices(r->value))
            j.push_back(czlab::rat_str(v));
        *json_array = dup_string(j.dump());
    });
}

czl_status czl_recapped_fixed_points(const czl_rotation* r, czl_table** out) {
    if (auto st = require(r && out, "null argument")) return st;
    return guarded([&] { *out = new czl_table{czlab::recapped_fixed_points(r->value)}; });
}

czl_status czl_action_spectrum_csv(const czl_rotation* r, const char* lo, const char* hi,
                                   char** out) {
    if (auto st = require(r && lo && hi && out, "null argument")) return st;
    return guarded([&] {
        auto spectrum = czlab::action_spectrum(r->value, czlab::parse_rational(lo),
                                               czlab::parse_rational(hi));
        *out = dup_string(czlab::spectrum_csv(spectrum));
    });
}

czl_status czl_floquet_multipliers(const czl_rotation* r, int64_t i, char** json_array) {
    if (auto st = require(r && json_array, "null argument")) return st;
    return guarded([&] {
        czlab::Json j = czlab::Json::array();
        for (const auto& v : czlab::floquet_multipliers(r->value, i))
            j.push_back(czlab::rat_str(v));
        *json_array = dup_string(j.dump());
    });
}

czl_status czl_loop_is_trivial(const char* const* angles, size_t count, int* out) {
    if (auto st = require(angles && out, "null argument")) return st;
    return guarded([&] {
        std::vector<czlab::Rational> values;
        values.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (angles[i] == nullptr) czlab::fail(czlab::Errc::invalid_argument, "null angle");
            values.push_back(czlab::parse_rational(angles[i]));
        }
        *out = czlab::is_trivial_rotation_loop(values) ? 1 : 0;
    });
}

czl_status czl_table_parse(const char* json, czl_table** out) {
    if (auto st = require(json && out, "null argument")) return st;
    return guarded([&] {
        *out = new czl_table{czlab::table_from_json(czlab::parse_json_text(json))};
    });
}

czl_status czl_table_to_json(const czl_table* t, char** out) {
    if (auto st = require(t && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(czlab::table_to_json(t->value).dump()); });
}

void czl_table_free(czl_table* t) { delete t; }

czl_status czl_table_is_balanced(const czl_table* t, int* out) {
    if (auto st = require(t && out, "null argument")) return st;
    return guarded([&] { *out = czlab::is_balanced(t->value) ? 1 : 0; });
}

czl_status czl_matching_rotation(const czl_table* t, int64_t k_max, czl_rotation** out) {
    if (auto st = require(t && out, "null argument")) return st;
    return guarded([&] { *out = new czl_rotation{czlab::matching_rotation(t->value, k_max)}; });
}

czl_status czl_check_matching_hypotheses(const czl_table* t, int64_t k_max, int* holds,
                                         char** report_json) {
    if (auto st = require(t && holds, "null argument")) return st;
    return guarded([&] {
        auto report = czlab::check_matching_hypotheses(t->value, k_max);
        *holds = report.holds ? 1 : 0;
        if (report_json)
            *report_json = dup_string(czlab::matching_hypotheses_to_json(report).dump());
    });
}

czl_status czl_resonance_lattice(const czl_table* t, int64_t bound, char** json_array) {
    if (auto st = require(t && json_array, "null argument")) return st;
    return guarded([&] {
        czlab::Json j = czlab::Json::array();
        for (const auto& vec : czlab::resonance_lattice(t->value, bound)) j.push_back(vec);
        *json_array = dup_string(j.dump());
    });
}

czl_status czl_s2_antisymmetry(const czl_descriptor* d0, const czl_descriptor* d1,
                               int64_t k_max, int* passed, char** report_json) {
    if (auto st = require(d0 && d1 && passed, "null argument")) return st;
    return guarded([&] {
        auto report = czlab::s2_antisymmetry_check(d0->value, d1->value, k_max);
        *passed = report.passed ? 1 : 0;
        if (report_json)
            *report_json = dup_string(czlab::antisymmetry_report_to_json(report).dump());
    });
}

czl_status czl_generate_descriptors(uint64_t seed, const char* family_json,
                                    char** instances_json) {
    if (auto st = require(family_json && instances_json, "null argument")) return st;
    return guarded([&] {
        auto family = descriptor_family_from_json(czlab::parse_json_text(family_json));
        auto generated = czlab::generate_descriptors(seed, family);
        czlab::Json j;
        j["instances"] = czlab::Json::array();
        for (const auto& d : generated.instances)
            j["instances"].push_back(czlab::descriptor_to_json(d));
        j["rejected_draws"] = generated.rejected_draws;
        *instances_json = dup_string(j.dump());
    });
}

czl_status czl_generate_rotations(uint64_t seed, const char* family_json,
                                  char** instances_json) {
    if (auto st = require(family_json && instances_json, "null argument")) return st;
    return guarded([&] {
        auto family = rotation_family_from_json(czlab::parse_json_text(family_json));
        auto generated = czlab::generate_rotations(seed, family);
        czlab::Json j;
        j["instances"] = czlab::Json::array();
        for (const auto& r : generated.instances)
            j["instances"].push_back(czlab::rotation_to_json(r));
        j["rejected_draws"] = generated.rejected_draws;
        *instances_json = dup_string(j.dump());
    });
}

czl_status czl_run_suite(const char* name, uint64_t seed, int64_t trials, int* all_passed,
                         char** report_json) {
    if (auto st = require(name && all_passed, "null argument")) return st;
    return guarded([&] {
        auto result = czlab::run_suite(name, seed, trials);
        *all_passed = result.all_passed() ? 1 : 0;
        if (report_json) *report_json = dup_string(czlab::suite_result_to_json(result).dump());
    });
}

}  // extern "C"
