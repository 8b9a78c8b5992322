#pragma once

#include <utility>
#include <vector>

#include "cliquebound/graph.hpp"

namespace cliquebound {

// Result of alpha-disintegration: iteratively remove vertices of degree at
// most alpha. The survivor set (the (alpha+1)-core) is independent of the
// deletion order; the trace records the order actually taken.
struct CoreResult {
    VertexSet survivors = 0;
    // (vertex, degree at deletion time), in deletion order.
    std::vector<std::pair<int, int>> removed;
};

// Deterministic trace: lowest-index removable vertex first.
CoreResult core(const Graph& g, int alpha);

}  // namespace cliquebound
