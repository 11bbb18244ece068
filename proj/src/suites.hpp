#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace czlab {

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t rejected_draws = 0;
    Json violation;  // first failing instance with context, or null

    bool all_passed() const { return failed == 0; }
};

// Seeded property suites over generated families:
//   oracle            index/jump cross-route identities, single-pair closed form
//   theorem-forward   condition (b) true  => 2l | mu'_k for every certified k
//   theorem-converse  condition (b) false => witness k located in the search window
//   theorem           both directions per trial
//   reconstruct       jump sequences identify the generator in a pool
//   intersect         2<arc,T> = mu'_k and iterated-arc divisibility
//   rotation          recapping zero-sum, matching round trip, spectrum marking
//   mean-bound        |mu_k - k hmu| < n for weakly non-degenerate data
//   antisymmetry      mu_k(d1) = -mu_k(d0) for inverse pairs, violations otherwise
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials);

const std::vector<std::string>& suite_names();

Json suite_result_to_json(const SuiteResult& result);

}  // namespace czlab
