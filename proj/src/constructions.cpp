#include "cliquebound/constructions.hpp"

#include <string>

namespace cliquebound {

Graph h_graph(const HParams& p) {
    p.validate();
    Graph g(p.n);
    const int core_size = p.k - p.a;  // |A ∪ C|
    for (int u = 0; u < core_size; ++u)
        for (int v = u + 1; v < core_size; ++v) g = g.with_edge(u, v);
    for (int u = 0; u < p.a; ++u)
        for (int v = core_size; v < p.n; ++v) g = g.with_edge(u, v);
    return g;
}

Graph eg_cycle_extremal(int n, int k) {
    if (k < 3) throw parameter_error("clique chain needs k >= 3");
    if (n < 1) throw parameter_error("graph order must be positive");
    if ((n - 1) % (k - 2) != 0)
        throw parameter_error("clique chain needs (k-2) | (n-1): n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    Graph g(n);
    const int blocks = (n - 1) / (k - 2);
    for (int b = 0; b < blocks; ++b) {
        int base = b * (k - 2);  // block occupies [base, base + k - 1)
        for (int u = base; u < base + k - 1; ++u)
            for (int v = u + 1; v < base + k - 1; ++v) g = g.with_edge(u, v);
    }
    return g;
}

Graph eg_path_extremal(int n, int k) {
    if (k < 2) throw parameter_error("clique components need k >= 2");
    if (n < 1) throw parameter_error("graph order must be positive");
    if (n % (k - 1) != 0)
        throw parameter_error("clique components need (k-1) | n: n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    Graph g(n);
    for (int base = 0; base < n; base += k - 1)
        for (int u = base; u < base + k - 1; ++u)
            for (int v = u + 1; v < base + k - 1; ++v) g = g.with_edge(u, v);
    return g;
}

Graph dominating_join(const Graph& g) { return g.with_vertex(g.vertices()); }

}  // namespace cliquebound
