#pragma once

#include "cliquebound/graph.hpp"
#include "cliquebound/limits.hpp"

namespace cliquebound {

// Greedy k-closure: starting from a graph with circumference < k, add any
// nonedge whose addition keeps the circumference below k, scanning nonedges
// lexicographically and restarting after each addition. The result contains
// the input and is k-closed: every remaining nonedge would create a cycle of
// length at least k. Closures are not unique as graphs; only the scan order
// (and hence this function's output) is deterministic.
Graph closure(const Graph& g, int k, SearchLimiter* limiter = nullptr);

}  // namespace cliquebound
