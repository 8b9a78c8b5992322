#pragma once

#include <functional>
#include <vector>

#include "cliquebound/limits.hpp"
#include "cliquebound/report.hpp"

namespace cliquebound {

struct VerifyOptions {
    int workers = 1;  // <= 0: hardware concurrency
    SearchLimiter* limiter = nullptr;
    std::size_t achiever_cap = 64;
};

// Maximum of the s-clique count over all 2-connected n-vertex isomorphism
// classes with circumference < k, compared against the two-endpoint bound.
// Equality and attainment by the extremal construction are expected for the
// whole domain n >= k >= 5.
VerifyReport verify_cycle_theorem(int n, int k, int s, const VerifyOptions& opts = {});

// Every graph attaining the edge bound among 2-connected classes with
// circumference < k must be one of the two extremal graphs (s = 2).
VerifyReport verify_uniqueness(int n, int k, const VerifyOptions& opts = {});

// Max of N_s over ALL n-vertex graphs with circumference < k against
// (n-1)/(k-2)*C(k-1,s); exact equality expected when (k-2) | (n-1).
VerifyReport verify_cycle_corollary(int n, int k, int s, const VerifyOptions& opts = {});

// Max of N_s over connected graphs with no path on k vertices against the
// two-endpoint path bound; equality expected for n >= k >= 4.
VerifyReport verify_path_theorem(int n, int k, int s, const VerifyOptions& opts = {});

// Max of N_s over ALL graphs with no path on k vertices against
// n/(k-1)*C(k-1,s); exact equality expected when (k-1) | n. k >= 3.
VerifyReport verify_path_corollary(int n, int k, int s, const VerifyOptions& opts = {});

// Runs every applicable verifier over the grid, sharing one enumeration per
// (n, k, class). Stops at the first violated report (which is returned
// last, with its counterexample). Reports whose enumeration hit the budget
// are marked incomplete and their assertions are skipped.
struct SweepSpec {
    int n_lo = 0, n_hi = -1;
    int k_lo = 0, k_hi = -1;
    int s_lo = 2, s_hi = 2;
    // Subset of {"cycle","uniqueness","cycle-all","path","path-all"};
    // empty means all five.
    std::vector<std::string> theorems;
};

std::vector<VerifyReport> sweep(const SweepSpec& spec, const VerifyOptions& opts = {});

// Seeded random falsification harness: the path-cycle lemma on random
// 2-connected graphs with random maximal paths, closure invariants, and
// core order-independence/nesting. Zero failures expected; any failure
// carries a graph6 reproducer.
struct PropertySuiteOptions {
    std::uint64_t seed = 1;
    std::uint64_t samples = 10000;
    int max_order = 10;
    SearchLimiter* limiter = nullptr;
    // Test hook: replace the exact circumference the lemma check consults
    // to confirm the harness detects a broken implementation.
    std::function<int(const Graph&)> circumference_impl;
};

PropertySuiteReport random_property_suite(const PropertySuiteOptions& opts = {});

}  // namespace cliquebound
