#pragma once

#include <cstddef>

#include "sigcover/graph.hpp"

namespace sigcover {

inline constexpr std::size_t default_epsilon_vertex_cap = 24;

enum class Kernel { serial, parallel };

// Minimum number of negative edges over all switchings of g. Each connected
// component is searched exhaustively with one vertex held fixed.
std::size_t negativeness(const SignedGraph& g, std::size_t vertex_cap = default_epsilon_vertex_cap,
                         Kernel kernel = Kernel::parallel);

namespace detail {

struct MaskEdge {
    unsigned u, v;
    unsigned negative;
};

// Minimum over masks in [0, 2^free_bits) of the number of edges with
// ((mask>>u) ^ (mask>>v) ^ negative) & 1; bit positions >= free_bits read as 0.
std::size_t min_frustration_serial(const std::vector<MaskEdge>& edges, unsigned free_bits);
std::size_t min_frustration_parallel(const std::vector<MaskEdge>& edges, unsigned free_bits);

}  // namespace detail

}  // namespace sigcover
