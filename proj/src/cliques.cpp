#include "cliquebound/cliques.hpp"

namespace cliquebound {
namespace detail {
namespace {

struct CliqueScan {
    const VertexSet* adj;
    std::uint64_t* counts;
    SearchLimiter* limiter;
    std::uint64_t steps = 0;

    // `allowed` holds common neighbors of the chosen clique that are larger
    // than its last member, so every clique is visited exactly once.
    void rec(VertexSet allowed, int depth) {
        if (limiter && (++steps & 1023) == 0 && !limiter->charge(1024))
            throw budget_exhausted("clique counting budget exhausted");
        while (allowed) {
            int v = pop_vertex(allowed);
            ++counts[depth + 1];
            VertexSet next = allowed & adj[v];
            if (next) rec(next, depth + 1);
        }
    }
};

}  // namespace

void clique_counts_raw(int n, const VertexSet* adj, std::uint64_t* counts,
                       SearchLimiter* limiter) {
    for (int s = 0; s <= n; ++s) counts[s] = 0;
    counts[0] = 1;
    CliqueScan scan{adj, counts, limiter};
    scan.rec(all_vertices(n), 0);
}

}  // namespace detail

CliqueVector clique_vector(const Graph& g, SearchLimiter* limiter) {
    CliqueVector cv;
    cv.counts.assign(static_cast<size_t>(g.order()) + 1, 0);
    detail::clique_counts_raw(g.order(), g.rows().data(), cv.counts.data(), limiter);
    return cv;
}

std::uint64_t count_cliques(const Graph& g, int s, SearchLimiter* limiter) {
    if (s < 1 || s > kMaxVertices)
        throw parameter_error("clique size must be in [1, 64]");
    if (s > g.order()) return 0;
    return clique_vector(g, limiter).counts[s];
}

}  // namespace cliquebound
