#pragma once

#include <cstdint>
#include <vector>

#include "cliquebound/graph.hpp"
#include "cliquebound/limits.hpp"

namespace cliquebound {

// counts[s] = number of unlabeled K_s subgraphs, s = 0..n. counts[0] = 1
// (the empty clique), counts[1] = n, counts[2] = e(G).
struct CliqueVector {
    std::vector<std::uint64_t> counts;

    std::uint64_t at(int s) const {
        return (s < 0 || s >= static_cast<int>(counts.size())) ? 0 : counts[s];
    }
};

CliqueVector clique_vector(const Graph& g, SearchLimiter* limiter = nullptr);

std::uint64_t count_cliques(const Graph& g, int s, SearchLimiter* limiter = nullptr);

namespace detail {
// Kernel for enumeration: fills counts[0..n] (caller provides n+1 slots).
void clique_counts_raw(int n, const VertexSet* adj, std::uint64_t* counts,
                       SearchLimiter* limiter);
}

}  // namespace cliquebound
