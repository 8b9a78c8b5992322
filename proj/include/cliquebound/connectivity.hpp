#pragma once

#include <utility>
#include <vector>

#include "cliquebound/graph.hpp"

namespace cliquebound {

bool is_connected(const Graph& g);

// Connected, at least 3 vertices, and no cut vertex. K_2 and K_1 are false.
bool is_2connected(const Graph& g);

// Blocks (maximal 2-connected subgraphs, bridges, and isolated vertices),
// cut vertices, and the block / cut-vertex incidence tree. Every edge lies
// in exactly one block; two blocks meet in at most one vertex, always a cut
// vertex.
struct BlockCutTree {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices = 0;
    // (block index, cut vertex) incidence pairs; acyclic per component.
    std::vector<std::pair<int, int>> tree_edges;
};

BlockCutTree block_cut_tree(const Graph& g);

namespace detail {
// Raw kernels shared with the enumeration hot path.
bool is_connected_raw(int n, const VertexSet* adj);
bool is_2connected_raw(int n, const VertexSet* adj);
}  // namespace detail

}  // namespace cliquebound
