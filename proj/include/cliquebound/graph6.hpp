#pragma once

#include <string>
#include <string_view>

#include "cliquebound/graph.hpp"

namespace cliquebound {

// graph6 text format (header-less variant), bit-exact per the published
// description: order as 6-bit bytes (+63), then the upper triangle in
// column-major order x(0,1) x(0,2) x(1,2) ... packed into 6-bit groups,
// zero-padded, each group +63.
std::string to_graph6(const Graph& g);

// Throws parse_error (with byte offset) on malformed input, including
// nonzero padding bits and orders outside [1, 64].
Graph from_graph6(std::string_view s);

}  // namespace cliquebound
