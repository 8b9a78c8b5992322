#include "cliquebound/cores.hpp"

namespace cliquebound {

CoreResult core(const Graph& g, int alpha) {
    if (alpha < 0) throw parameter_error("degree threshold must be nonnegative");
    CoreResult result;
    result.survivors = g.vertices();
    for (;;) {
        int victim = -1, vdeg = 0;
        for (VertexSet rest = result.survivors; rest;) {
            int v = pop_vertex(rest);
            int d = set_size(g.neighbors(v) & result.survivors);
            if (d <= alpha) {
                victim = v;
                vdeg = d;
                break;
            }
        }
        if (victim < 0) break;
        result.survivors &= ~vbit(victim);
        result.removed.emplace_back(victim, vdeg);
    }
    return result;
}

}  // namespace cliquebound
