#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "distk/graph.hpp"

namespace distk {

// All-pairs shortest path lengths. Disconnected pairs hold kUnreachable,
// which compares unequal to every finite distance.
struct DistanceMatrix {
    static constexpr std::uint8_t kUnreachable = 0xFF;

    explicit DistanceMatrix(int n) : n(n), d(static_cast<std::size_t>(n) * n, kUnreachable) {}

    std::uint8_t at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    void set(int u, int v, std::uint8_t value) { d[static_cast<std::size_t>(u) * n + v] = value; }

    int n;
    std::vector<std::uint8_t> d;
};

namespace detail {

// BFS from s; levels[r] = set of vertices at distance exactly r, up to max_depth.
// Returns the number of levels filled (including level 0).
inline int bfs_levels(const Graph& g, int s, int max_depth, std::uint64_t* levels) {
    std::uint64_t visited = std::uint64_t{1} << s;
    std::uint64_t frontier = visited;
    levels[0] = frontier;
    int depth = 0;
    while (depth < max_depth && frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t scan = frontier;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            next |= g.neighbors(v);
        }
        next &= ~visited;
        visited |= next;
        frontier = next;
        ++depth;
        levels[depth] = frontier;
    }
    return depth + 1;
}

}  // namespace detail

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m(g.n());
    std::uint64_t levels[kMaxVertices + 1];
    for (int s = 0; s < g.n(); ++s) {
        int filled = detail::bfs_levels(g, s, g.n() - 1, levels);
        for (int r = 0; r < filled; ++r) {
            std::uint64_t scan = levels[r];
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                m.set(s, v, static_cast<std::uint8_t>(r));
            }
        }
    }
    return m;
}

// The distance-k graph: same vertex set, {u,v} an edge iff d_G(u,v) = k.
inline Graph distance_k_graph(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("distance_k_graph: k must be >= 1");
    if (k == 1) return g;
    Graph h(g.n());
    std::uint64_t levels[kMaxVertices + 1];
    for (int s = 0; s < g.n(); ++s) {
        int filled = detail::bfs_levels(g, s, k, levels);
        if (filled <= k) continue;
        std::uint64_t at_k = levels[k] & ~((std::uint64_t{1} << s) - 1);
        while (at_k) {
            int v = std::countr_zero(at_k);
            at_k &= at_k - 1;
            h.add_edge(s, v);
        }
    }
    return h;
}

// Largest finite distance; nullopt when g is disconnected.
inline std::optional<int> diameter(const Graph& g) {
    DistanceMatrix m = all_pairs_distances(g);
    int best = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (m.at(u, v) == DistanceMatrix::kUnreachable) return std::nullopt;
            best = std::max(best, static_cast<int>(m.at(u, v)));
        }
    return best;
}

}  // namespace distk
