#pragma once

#include "cliquebound/bounds.hpp"
#include "cliquebound/graph.hpp"

namespace cliquebound {

// Three-part extremal graph on parts A (size a), B (size n-k+a),
// C (size k-2a): all A-B edges plus a complete graph on A∪C. Vertices are
// labeled A first (0..a-1), then C (a..k-a-1), then B (k-a..n-1), so tests
// and the CLI can address parts deterministically. Circumference < k; the
// graph is 2-connected exactly when a >= 2.
Graph h_graph(const HParams& p);
inline Graph h_graph(int n, int k, int a) { return h_graph(HParams{n, k, a}); }

// Chain of (n-1)/(k-2) cliques of order k-1, consecutive cliques sharing
// one vertex: the edge/clique-extremal family for the circumference bound
// over all graphs. Requires k >= 3 and (k-2) | (n-1).
Graph eg_cycle_extremal(int n, int k);

// n/(k-1) disjoint cliques of order k-1: the extremal family for the
// path bound over all graphs. Requires k >= 2 and (k-1) | n.
Graph eg_path_extremal(int n, int k);

// Adds a vertex adjacent to every existing vertex.
Graph dominating_join(const Graph& g);

}  // namespace cliquebound
