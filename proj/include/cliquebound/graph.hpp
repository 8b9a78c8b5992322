#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

#include "cliquebound/bits.hpp"
#include "cliquebound/errors.hpp"

namespace cliquebound {

// Undirected simple graph on 1..64 labeled vertices, one adjacency bitmask
// per vertex. Graphs are immutable values: edge operations return a new
// graph, so instances can be shared freely between workers.
//
// Invariants: adjacency is symmetric, loop-free, and every set bit is < n;
// rows at index >= n are zero (so operator== is plain memberwise equality).
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_{} {
        if (n < 1 || n > kMaxVertices)
            throw parameter_error("graph order must be in [1, 64], got " +
                                  std::to_string(n));
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.set_edge(u, v);
        return g;
    }

    // Complete graph K_n.
    static Graph complete(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) g.adj_[v] = all_vertices(n) & ~vbit(v);
        return g;
    }

    // Builds from raw adjacency rows, validating symmetry, loop-freeness,
    // and vertex range.
    static Graph from_adjacency(int n, std::span<const VertexSet> rows) {
        if (static_cast<int>(rows.size()) != n)
            throw parameter_error("adjacency row count does not match order");
        Graph g(n);
        const VertexSet valid = all_vertices(n);
        for (int v = 0; v < n; ++v) {
            VertexSet row = rows[v];
            if (row & ~valid) throw parameter_error("adjacency bit out of range");
            if (row & vbit(v)) throw parameter_error("loops are not allowed");
            for (VertexSet nb = row; nb;)
                if (!((rows[pop_vertex(nb)] >> v) & 1))
                    throw parameter_error("adjacency is not symmetric");
            g.adj_[v] = row;
        }
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return all_vertices(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return set_size(adj_[v]); }
    std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<size_t>(n_)}; }

    bool has_edge(int u, int v) const {
        return u != v && (adj_[u] & vbit(v)) != 0;
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    // New graph with edge {u,v} present (idempotent).
    Graph with_edge(int u, int v) const {
        check_pair(u, v);
        Graph g = *this;
        g.set_edge(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_pair(u, v);
        Graph g = *this;
        g.adj_[u] &= ~vbit(v);
        g.adj_[v] &= ~vbit(u);
        return g;
    }

    // New graph with an extra vertex labeled n, adjacent to `nbrs`.
    Graph with_vertex(VertexSet nbrs = 0) const {
        if (n_ >= kMaxVertices)
            throw parameter_error("vertex capacity (64) exceeded");
        if ((nbrs & ~vertices()) != 0)
            throw parameter_error("neighbor set contains unknown vertices");
        Graph g = *this;
        g.n_ = n_ + 1;
        g.adj_[n_] = nbrs;
        for (VertexSet rest = nbrs; rest;) g.adj_[pop_vertex(rest)] |= vbit(n_);
        return g;
    }

    // Induced subgraph on `keep`, relabeled by increasing old index.
    Graph induced(VertexSet keep) const {
        keep &= vertices();
        int m = set_size(keep);
        if (m == 0) throw parameter_error("induced subgraph needs at least one vertex");
        std::array<int, kMaxVertices> newlabel{};
        int next = 0;
        for (VertexSet rest = keep; rest;) newlabel[pop_vertex(rest)] = next++;
        Graph g(m);
        for (VertexSet rest = keep; rest;) {
            int v = pop_vertex(rest);
            for (VertexSet nb = adj_[v] & keep; nb;)
                g.adj_[newlabel[v]] |= vbit(newlabel[pop_vertex(nb)]);
        }
        return g;
    }

    Graph without_vertex(int v) const {
        check_vertex(v);
        if (n_ == 1) throw parameter_error("cannot remove the last vertex");
        return induced(vertices() & ~vbit(v));
    }

    // Relabels: old vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
    Graph permuted(std::span<const int> perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw parameter_error("permutation length mismatch");
        VertexSet seen = 0;
        for (int v : perm) {
            if (v < 0 || v >= n_ || (seen & vbit(v)))
                throw parameter_error("not a permutation of the vertex set");
            seen |= vbit(v);
        }
        Graph g(n_);
        for (int v = 0; v < n_; ++v)
            for (VertexSet nb = adj_[v]; nb;)
                g.adj_[perm[v]] |= vbit(perm[pop_vertex(nb)]);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw parameter_error("vertex " + std::to_string(v) + " out of range");
    }
    void check_pair(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw parameter_error("loops are not allowed");
    }
    void set_edge(int u, int v) {
        check_pair(u, v);
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }

    int n_;
    std::array<VertexSet, kMaxVertices> adj_;
};

}  // namespace cliquebound
