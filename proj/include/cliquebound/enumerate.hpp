#pragma once

#include <cstdint>
#include <functional>

#include "cliquebound/canonical.hpp"
#include "cliquebound/graph.hpp"
#include "cliquebound/limits.hpp"

namespace cliquebound {

// Full enumeration (no filter) is practical to n = 10; 11 is best-effort
// with a budget, 12 the hard cap.
inline constexpr int kMaxEnumerationOrder = 12;

struct EnumerateOptions {
    int workers = 1;  // <= 0: hardware concurrency
    SearchLimiter* limiter = nullptr;
    // Must describe a class closed under taking induced subgraphs
    // (circumference < k and no-path-on-k both qualify); intermediate
    // levels are pruned with it. Null keeps every graph.
    std::function<bool(const Graph&)> hereditary_filter;
};

struct EnumerateStats {
    std::uint64_t candidates = 0;  // labeled extensions examined, all levels
    std::uint64_t classes = 0;     // isomorphism classes visited at order n
    bool complete = true;          // false when the budget tripped
};

// Visits every isomorphism class of simple graphs on n vertices (within the
// filter class) exactly once, growing one vertex at a time and keeping a
// child only when its canonically-chosen deletion reproduces the parent
// class. The visitor receives the canonically labeled representative; with
// several workers it is called concurrently (worker index 0..workers-1).
EnumerateStats enumerate_graphs(int n,
                                const std::function<void(const Graph&, int)>& visit,
                                const EnumerateOptions& opts = {});

namespace detail {
// Rebuilds the canonically labeled adjacency rows encoded in a key.
void rows_from_key(const CanonKey& key, VertexSet* rows);
int resolve_workers(int requested);
}  // namespace detail

}  // namespace cliquebound
