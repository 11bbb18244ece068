#include <functional>
#include <thread>

#include "doctest.h"
#include "generate.hpp"
#include "json_io.hpp"
#include "suites.hpp"

using namespace czlab;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::none;
}

}  // namespace

TEST_CASE("generation is deterministic in the seed") {
    DescriptorFamily family;
    family.count = 8;
    auto first = generate_descriptors(7, family);
    auto second = generate_descriptors(7, family);
    REQUIRE(first.instances.size() == second.instances.size());
    for (std::size_t i = 0; i < first.instances.size(); ++i)
        CHECK(first.instances[i] == second.instances[i]);
    CHECK(first.rejected_draws == second.rejected_draws);

    auto other = generate_descriptors(8, family);
    bool all_equal = true;
    for (std::size_t i = 0; i < first.instances.size(); ++i)
        all_equal = all_equal && (first.instances[i] == other.instances[i]);
    CHECK(!all_equal);
}

TEST_CASE("generated descriptors are certified to their own horizon") {
    DescriptorFamily family;
    family.count = 30;
    auto generated = generate_descriptors(3, family);
    for (const auto& d : generated.instances) {
        CHECK_NOTHROW(validate_descriptor(d, d.horizon()));
        CHECK(d.horizon() == d.max_certifiable_horizon());
    }
}

TEST_CASE("rotation generation respects the horizon") {
    RotationFamily family;
    family.count = 10;
    auto generated = generate_rotations(5, family);
    for (const auto& r : generated.instances) {
        CHECK(r.horizon == family.horizon);
        Rational sum(0);
        for (const auto& a : r.angles) sum += a;
        CHECK(sum == 0);
    }
}

TEST_CASE("families that cannot produce instances exhaust loudly") {
    RotationFamily degenerate;
    degenerate.count = 1;
    degenerate.denominators = {1};  // every difference is an integer
    CHECK(code_of([&] { generate_rotations(1, degenerate); }) == Errc::family_exhausted);

    DescriptorFamily narrow;
    narrow.count = 1;
    narrow.den_min = narrow.den_max = 4;
    narrow.min_numerator = 3;  // only 3/4 is eligible
    narrow.min_entries = narrow.max_entries = 2;
    CHECK(code_of([&] { generate_descriptors(1, narrow); }) == Errc::family_exhausted);
}

TEST_CASE("suites run clean on small budgets and report deterministically") {
    for (const auto& name : suite_names()) {
        auto result = run_suite(name, 2024, 3);
        CHECK(result.all_passed());
        CHECK(result.passed == 3);
        auto again = run_suite(name, 2024, 3);
        CHECK(suite_result_to_json(result).dump() == suite_result_to_json(again).dump());
    }
    CHECK(code_of([] { run_suite("no-such-suite", 1, 1); }) == Errc::invalid_argument);
}

TEST_CASE("descriptors evaluate safely and identically across threads") {
    DescriptorFamily family;
    family.count = 4;
    auto generated = generate_descriptors(17, family);
    std::vector<std::vector<std::int64_t>> expected;
    for (const auto& d : generated.instances)
        expected.push_back(index_sequence(d, std::min<std::int64_t>(50, d.horizon() - 1)));

    std::vector<std::vector<std::int64_t>> results(expected.size());
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < generated.instances.size(); ++i) {
        workers.emplace_back([&, i] {
            const auto& d = generated.instances[i];
            results[i] = index_sequence(d, std::min<std::int64_t>(50, d.horizon() - 1));
        });
    }
    for (auto& w : workers) w.join();
    CHECK(results == expected);
}

TEST_CASE("suite reports carry the counters") {
    auto result = run_suite("oracle", 99, 5);
    Json j = suite_result_to_json(result);
    CHECK(j["suite"] == "oracle");
    CHECK(j["seed"] == 99);
    CHECK(j["trials"] == 5);
    CHECK(j["passed"] == 5);
    CHECK(j["failed"] == 0);
    CHECK(j["violation"].is_null());
}
