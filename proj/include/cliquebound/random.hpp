#pragma once

#include <cstdint>
#include <random>

#include "cliquebound/cycles.hpp"
#include "cliquebound/graph.hpp"

namespace cliquebound {

// Deterministic randomness across platforms: mt19937_64 output is
// standardized, std::uniform_int_distribution is not, so sampling uses
// masked rejection on the raw stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            std::uint64_t v = engine_() & mask;
            if (v < bound) return v;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // True with probability percent/100.
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

private:
    std::mt19937_64 engine_;
};

// Each pair becomes an edge independently with probability percent/100.
Graph random_graph(Rng& rng, int n, int edge_percent);

// Rejection-samples a 2-connected graph at varying density; falls back to
// K_n after many misses so the function always terminates.
Graph random_2connected_graph(Rng& rng, int n);

// Random start vertex, both endpoints greedily extended by random unvisited
// neighbors until stuck: a maximal (not necessarily maximum) simple path.
PathWitness random_maximal_path(Rng& rng, const Graph& g);

}  // namespace cliquebound
