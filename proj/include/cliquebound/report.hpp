#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquebound/rational.hpp"

#include "json.hpp"

namespace cliquebound {

// Outcome of one theorem verification at one parameter tuple.
// Determinism: identical parameters (any worker count) produce identical
// reports apart from elapsed_seconds, which serializers can omit.
struct VerifyReport {
    std::string theorem;  // cycle | cycle-all | uniqueness | path | path-all
    int n = 0, k = 0, s = 0;
    Rational bound;                // exact bound value
    BigInt bound_floor = 0;        // integer cap actually compared against
    std::uint64_t observed_max = 0;
    bool holds = false;     // observed_max <= bound (and uniqueness, if checked)
    bool attainment_expected = false;  // equality promised for these parameters
    bool attained = false;             // observed_max == bound
    bool construction_attains = false;  // named extremal graph reaches observed_max
    bool uniqueness_checked = false;
    bool uniqueness_holds = true;
    std::vector<std::string> achievers;  // canonical graph6, sorted; may be truncated
    bool achievers_truncated = false;
    std::uint64_t achiever_count = 0;
    std::vector<std::string> expected_achievers;  // canonical graph6 of the extremal graphs
    std::uint64_t graphs_enumerated = 0;  // isomorphism classes in the hereditary class
    std::uint64_t graphs_in_class = 0;    // after the final class predicate
    double elapsed_seconds = 0.0;
    bool complete = true;  // false when a budget tripped
    std::optional<std::string> counterexample;  // graph6 witnessing a violation
};

nlohmann::json to_json(const VerifyReport& r, bool include_timing = true);
std::string tsv_header();
std::string to_tsv_row(const VerifyReport& r, bool include_timing = true);

struct PropertyFailure {
    std::string property;
    std::string graph6;
    std::string detail;
};

struct PropertySuiteReport {
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t checks_run = 0;
    bool complete = true;
    std::vector<PropertyFailure> failures;
};

nlohmann::json to_json(const PropertySuiteReport& r);

}  // namespace cliquebound
