#pragma once

#include <vector>

#include "cliquebound/graph.hpp"
#include "cliquebound/limits.hpp"

namespace cliquebound {

// Exact length of a longest cycle (0 if acyclic), by branch-and-bound DFS
// over simple paths with bitmask state. Exactness target is n <= 16; the
// limiter bounds pathological instances.
int circumference(const Graph& g, SearchLimiter* limiter = nullptr);

// Early-exit variant: true as soon as any cycle of length >= k is found.
bool has_cycle_at_least(const Graph& g, int k, SearchLimiter* limiter = nullptr);

// Number of vertices on a longest simple path (1 for edgeless graphs).
int longest_path_vertices(const Graph& g, SearchLimiter* limiter = nullptr);

// True iff the graph contains a path on k vertices.
bool has_path_on(const Graph& g, int k, SearchLimiter* limiter = nullptr);

// Most vertices on a simple path with endpoints u and v; 0 if none exists,
// 1 when u == v.
int longest_path_between(const Graph& g, int u, int v, SearchLimiter* limiter = nullptr);

// A concrete simple path: ordered vertices, consecutive pairs adjacent.
struct PathWitness {
    std::vector<int> vertices;

    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    VertexSet mask() const {
        VertexSet m = 0;
        for (int v : vertices) m |= vbit(v);
        return m;
    }
    // Throws parameter_error unless the vertices form a simple path in g.
    void validate(const Graph& g) const;
};

// |N(v) ∩ V(P)|.
int path_degree(const Graph& g, const PathWitness& p, int v);

// Checks that the graph contains a cycle of length at least
// min{m+1, d_P(x) + d_P(y)} for the given path witness with m edges and
// endpoints x, y. Requires a 2-connected graph; must hold on every valid
// input, so it doubles as a falsification harness.
bool lemma_check(const Graph& g, const PathWitness& p, SearchLimiter* limiter = nullptr);

namespace detail {
int circumference_raw(int n, const VertexSet* adj, SearchLimiter* limiter, int stop_at);
// Only cycles through `w` are considered; used when all other cycles are
// already known to be short.
bool cycle_at_least_through_raw(int n, const VertexSet* adj, int w, int k,
                                SearchLimiter* limiter);
int longest_path_raw(int n, const VertexSet* adj, SearchLimiter* limiter, int stop_at);
// True iff some simple u-v path has at least k vertices.
bool path_between_at_least_raw(int n, const VertexSet* adj, int u, int v, int k,
                               SearchLimiter* limiter);
}  // namespace detail

}  // namespace cliquebound
