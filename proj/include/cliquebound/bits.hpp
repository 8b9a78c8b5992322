#pragma once

#include <bit>
#include <cstdint>

namespace cliquebound {

// A set of vertices of a graph on at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// All vertices 0..n-1.
constexpr VertexSet all_vertices(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

// Lowest vertex in a nonempty set.
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Removes and returns the lowest vertex of a nonempty set.
constexpr int pop_vertex(VertexSet& s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    return v;
}

}  // namespace cliquebound
