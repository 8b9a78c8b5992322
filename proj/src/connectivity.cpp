#include "cliquebound/connectivity.hpp"

#include <array>

namespace cliquebound {

namespace detail {

bool is_connected_raw(int n, const VertexSet* adj) {
    VertexSet reach = vbit(0), frontier = vbit(0);
    while (frontier) {
        VertexSet next = 0;
        while (frontier) next |= adj[pop_vertex(frontier)];
        frontier = next & ~reach;
        reach |= next;
    }
    return reach == all_vertices(n);
}

namespace {

// Lowpoint DFS; reports whether any articulation vertex exists.
struct CutScan {
    int n;
    const VertexSet* adj;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    int timer = 0;
    bool found_cut = false;

    int dfs(int v, int parent) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (VertexSet nb = adj[v]; nb;) {
            int w = pop_vertex(nb);
            if (disc[w] == 0) {
                ++children;
                dfs(w, v);
                if (low[w] < low[v]) low[v] = low[w];
                if (parent >= 0 && low[w] >= disc[v]) found_cut = true;
            } else if (w != parent && disc[w] < low[v]) {
                low[v] = disc[w];
            }
        }
        return children;
    }
};

}  // namespace

bool is_2connected_raw(int n, const VertexSet* adj) {
    if (n < 3) return false;
    CutScan scan{n, adj};
    int root_children = scan.dfs(0, -1);
    if (root_children > 1) scan.found_cut = true;
    if (scan.timer != n) return false;  // disconnected
    return !scan.found_cut;
}

}  // namespace detail

bool is_connected(const Graph& g) {
    return detail::is_connected_raw(g.order(), g.rows().data());
}

bool is_2connected(const Graph& g) {
    return detail::is_2connected_raw(g.order(), g.rows().data());
}

namespace {

// Hopcroft-Tarjan biconnected components with an explicit edge stack.
struct BlockScan {
    const Graph& g;
    BlockCutTree out;
    std::array<int, kMaxVertices> disc{};
    std::array<int, kMaxVertices> low{};
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    explicit BlockScan(const Graph& graph) : g(graph) {}

    void pop_block(int u, int w) {
        VertexSet members = 0;
        std::pair<int, int> top;
        do {
            top = edge_stack.back();
            edge_stack.pop_back();
            members |= vbit(top.first) | vbit(top.second);
        } while (top != std::make_pair(u, w));
        out.blocks.push_back(members);
    }

    void dfs(int v, int parent) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (VertexSet nb = g.neighbors(v); nb;) {
            int w = pop_vertex(nb);
            if (disc[w] == 0) {
                ++children;
                edge_stack.emplace_back(v, w);
                dfs(w, v);
                if (low[w] < low[v]) low[v] = low[w];
                if ((parent >= 0 && low[w] >= disc[v]) || (parent < 0 && children > 1))
                    out.cut_vertices |= vbit(v);
                if (low[w] >= disc[v]) pop_block(v, w);
            } else if (w != parent && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                if (disc[w] < low[v]) low[v] = disc[w];
            }
        }
    }
};

}  // namespace

BlockCutTree block_cut_tree(const Graph& g) {
    BlockScan scan(g);
    for (int v = 0; v < g.order(); ++v) {
        if (scan.disc[v] == 0) {
            scan.dfs(v, -1);
            if (g.degree(v) == 0) scan.out.blocks.push_back(vbit(v));
        }
    }
    BlockCutTree result = std::move(scan.out);
    for (int b = 0; b < static_cast<int>(result.blocks.size()); ++b)
        for (VertexSet cuts = result.blocks[b] & result.cut_vertices; cuts;)
            result.tree_edges.emplace_back(b, pop_vertex(cuts));
    return result;
}

}  // namespace cliquebound
