#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cliquebound/graph.hpp"

namespace cliquebound {

// Canonical labeling works for graphs on at most 16 vertices (the key packs
// the 120-bit upper triangle of K_16 into two words). Enumeration-scale
// inputs are n <= 12, where the refined backtracking search is fast.
inline constexpr int kCanonMaxOrder = 16;

// Order plus the canonically relabeled adjacency bits; equal keys mean
// isomorphic graphs. Internal format, stable within one artifact version.
struct CanonKey {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 2> words{};
    auto operator<=>(const CanonKey&) const = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const {
        std::uint64_t h = k.n * 0x9e3779b97f4a7c15ull;
        h ^= k.words[0] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= k.words[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct CanonicalLabeling {
    CanonKey key;
    // position_to_vertex[p] = original vertex placed at canonical position p.
    std::array<std::uint8_t, kCanonMaxOrder> position_to_vertex{};
};

namespace detail {
CanonicalLabeling canonical_labeling_raw(int n, const VertexSet* adj);
}

// The same graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

// Canonical byte string: graph6 of the canonically relabeled graph.
// Identical for isomorphic graphs, distinct for non-isomorphic ones.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace cliquebound
