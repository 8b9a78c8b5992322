#include "cliquebound/cycles.hpp"

#include <algorithm>

#include "cliquebound/connectivity.hpp"

namespace cliquebound {
namespace detail {
namespace {

// Vertices reachable from `from` (inclusive) using only vertices in `allowed`.
VertexSet flood(const VertexSet* adj, VertexSet from, VertexSet allowed) {
    VertexSet reach = from & allowed, frontier = reach;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) next |= adj[pop_vertex(frontier)];
        frontier = next & allowed & ~reach;
        reach |= frontier;
    }
    return reach;
}

struct CycleSearch {
    const VertexSet* adj;
    SearchLimiter* limiter;
    int stop_at;   // early exit once best >= stop_at (0 disables)
    int anchor;    // cycles must close at this vertex
    VertexSet mask;
    int best = 0;
    std::uint64_t steps = 0;

    bool done() const { return stop_at > 0 && best >= stop_at; }

    void dfs(int v, VertexSet visited, int len) {
        if (limiter && (++steps & 2047) == 0 && !limiter->charge(2048))
            throw budget_exhausted("cycle search budget exhausted");
        if (len >= 3 && (adj[v] & vbit(anchor)) && len > best) best = len;
        if (done()) return;
        VertexSet open = (mask & ~visited) | vbit(v);
        VertexSet reach = flood(adj, vbit(v), open);
        if (len + set_size(reach) - 1 <= best) return;
        if (!(adj[anchor] & reach)) return;  // no way back to close a cycle
        for (VertexSet cand = adj[v] & mask & ~visited; cand;) {
            int w = pop_vertex(cand);
            dfs(w, visited | vbit(w), len + 1);
            if (done()) return;
        }
    }
};

}  // namespace

int circumference_raw(int n, const VertexSet* adj, SearchLimiter* limiter, int stop_at) {
    CycleSearch search{adj, limiter, stop_at, 0, 0};
    // Each cycle is found from its smallest vertex.
    for (int s = 0; s + 2 < n; ++s) {
        if (n - s <= search.best) break;
        search.anchor = s;
        search.mask = all_vertices(n) & ~(vbit(s) - 1);
        search.dfs(s, vbit(s), 1);
        if (search.done()) break;
    }
    return search.best;
}

bool cycle_at_least_through_raw(int n, const VertexSet* adj, int w, int k,
                                SearchLimiter* limiter) {
    if (k <= 0) return true;
    CycleSearch search{adj, limiter, k, w, all_vertices(n)};
    search.dfs(w, vbit(w), 1);
    return search.best >= k;
}

namespace {

struct PathSearch {
    const VertexSet* adj;
    SearchLimiter* limiter;
    int stop_at;
    int target;  // -1: free endpoint
    int best = 0;
    std::uint64_t steps = 0;

    bool done() const { return stop_at > 0 && best >= stop_at; }

    void dfs(int v, VertexSet visited, int len) {
        if (limiter && (++steps & 2047) == 0 && !limiter->charge(2048))
            throw budget_exhausted("path search budget exhausted");
        if (target < 0) {
            if (len > best) best = len;
        } else if (v == target) {
            if (len > best) best = len;
            return;
        }
        if (done()) return;
        VertexSet reach = flood(adj, vbit(v), ~visited | vbit(v));
        if (len + set_size(reach) - 1 <= best) return;
        if (target >= 0 && !(reach & vbit(target))) return;
        for (VertexSet cand = adj[v] & ~visited; cand;) {
            int w = pop_vertex(cand);
            dfs(w, visited | vbit(w), len + 1);
            if (done()) return;
        }
    }
};

}  // namespace

int longest_path_raw(int n, const VertexSet* adj, SearchLimiter* limiter, int stop_at) {
    PathSearch search{adj, limiter, stop_at, -1};
    for (int s = 0; s < n; ++s) {
        search.dfs(s, vbit(s), 1);
        if (search.done()) break;
        if (search.best >= n) break;
    }
    return search.best;
}

bool path_between_at_least_raw(int /*n*/, const VertexSet* adj, int u, int v, int k,
                               SearchLimiter* limiter) {
    PathSearch search{adj, limiter, k, v};
    search.dfs(u, vbit(u), 1);
    return search.best >= k;
}

}  // namespace detail

int circumference(const Graph& g, SearchLimiter* limiter) {
    return detail::circumference_raw(g.order(), g.rows().data(), limiter, 0);
}

bool has_cycle_at_least(const Graph& g, int k, SearchLimiter* limiter) {
    if (k <= 0) return true;
    return detail::circumference_raw(g.order(), g.rows().data(), limiter, k) >= k;
}

int longest_path_vertices(const Graph& g, SearchLimiter* limiter) {
    return detail::longest_path_raw(g.order(), g.rows().data(), limiter, 0);
}

bool has_path_on(const Graph& g, int k, SearchLimiter* limiter) {
    if (k <= 1) return k >= 0;
    return detail::longest_path_raw(g.order(), g.rows().data(), limiter, k) >= k;
}

int longest_path_between(const Graph& g, int u, int v, SearchLimiter* limiter) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw parameter_error("endpoint out of range");
    if (u == v) return 1;
    detail::PathSearch search{g.rows().data(), limiter, 0, v};
    search.dfs(u, vbit(u), 1);
    return search.best;
}

void PathWitness::validate(const Graph& g) const {
    if (vertices.empty()) throw parameter_error("path witness is empty");
    VertexSet seen = 0;
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.order())
            throw parameter_error("path witness vertex out of range");
        if (seen & vbit(v)) throw parameter_error("path witness repeats a vertex");
        seen |= vbit(v);
        if (i > 0 && !g.has_edge(vertices[i - 1], v))
            throw parameter_error("path witness vertices " +
                                  std::to_string(vertices[i - 1]) + "," +
                                  std::to_string(v) + " are not adjacent");
    }
}

int path_degree(const Graph& g, const PathWitness& p, int v) {
    p.validate(g);
    if (v < 0 || v >= g.order()) throw parameter_error("vertex out of range");
    return set_size(g.neighbors(v) & p.mask());
}

bool lemma_check(const Graph& g, const PathWitness& p, SearchLimiter* limiter) {
    if (!is_2connected(g))
        throw parameter_error("lemma check requires a 2-connected graph");
    p.validate(g);
    int m = p.edge_count();
    int need = std::min(m + 1, path_degree(g, p, p.front()) + path_degree(g, p, p.back()));
    return detail::circumference_raw(g.order(), g.rows().data(), limiter, need) >= need;
}

}  // namespace cliquebound
