#include "cliquebound/closure.hpp"

#include "cliquebound/cycles.hpp"

namespace cliquebound {

Graph closure(const Graph& g, int k, SearchLimiter* limiter) {
    if (k < 3) throw parameter_error("closure threshold must be at least 3");
    if (circumference(g, limiter) >= k)
        throw parameter_error("closure requires circumference below the threshold");
    Graph current = g;
    const int n = g.order();
    bool added = true;
    while (added) {
        added = false;
        for (int u = 0; u < n && !added; ++u) {
            for (int v = u + 1; v < n && !added; ++v) {
                if (current.has_edge(u, v)) continue;
                // Adding uv creates a long cycle iff a u-v path already has
                // >= k-1 edges; all other cycles are inherited and short.
                if (!detail::path_between_at_least_raw(n, current.rows().data(), u, v, k,
                                                       limiter)) {
                    current = current.with_edge(u, v);
                    added = true;
                }
            }
        }
    }
    return current;
}

}  // namespace cliquebound
