#pragma once

// Truth tables of the two graph problems: Graph-Collision on a fixed graph
// (input = vertex marks) and Triangle (input = adjacency upper triangle).

#include <cstdint>
#include <string>
#include <vector>

#include "gctri/boolfn.hpp"
#include "gctri/graph.hpp"

namespace gctri {

/// Input bit v is the mark of vertex v; output 1 iff some edge has both ends marked.
inline BooleanFunction graph_collision_fn(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kMaxArity) {
        throw SizeLimitError("graph_collision_fn supports at most 20 vertices, got " + std::to_string(n));
    }
    std::vector<std::uint64_t> edge_masks;
    edge_masks.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edge_masks.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return BooleanFunction::tabulate(
        static_cast<unsigned>(n),
        [&](std::uint64_t idx) {
            for (auto mask : edge_masks) {
                if ((idx & mask) == mask) return true;
            }
            return false;
        },
        "gc");
}

/// Input bits are the row-major upper triangle (0,1),(0,2),...,(n-2,n-1).
inline BooleanFunction triangle_fn(unsigned n) {
    if (n < 1 || Graph::pair_count(n) > kMaxArity) {
        throw SizeLimitError("triangle_fn requires 1 <= n <= 6, got " + std::to_string(n));
    }
    // pair_bit[u][v] = table bit of edge {u,v}
    std::vector<std::vector<unsigned>> pair_bit(n, std::vector<unsigned>(n, 0));
    unsigned k = 0;
    for (unsigned u = 0; u < n; ++u) {
        for (unsigned v = u + 1; v < n; ++v, ++k) pair_bit[u][v] = pair_bit[v][u] = k;
    }
    std::vector<std::uint64_t> triple_masks;
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = a + 1; b < n; ++b) {
            for (unsigned c = b + 1; c < n; ++c) {
                triple_masks.push_back((std::uint64_t{1} << pair_bit[a][b]) | (std::uint64_t{1} << pair_bit[a][c]) |
                                       (std::uint64_t{1} << pair_bit[b][c]));
            }
        }
    }
    return BooleanFunction::tabulate(
        static_cast<unsigned>(Graph::pair_count(n)),
        [&](std::uint64_t idx) {
            for (auto mask : triple_masks) {
                if ((idx & mask) == mask) return true;
            }
            return false;
        },
        "tri:" + std::to_string(n));
}

}  // namespace gctri
