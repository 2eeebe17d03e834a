#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "distk/graph.hpp"

namespace distk {

inline bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        std::uint64_t nu = g.neighbors(u);
        std::uint64_t higher = nu & ~((std::uint64_t{2} << u) - 1);
        while (higher) {
            int v = std::countr_zero(higher);
            higher &= higher - 1;
            if (nu & g.neighbors(v)) return false;
        }
    }
    return true;
}

inline bool is_connected(const Graph& g) {
    std::uint64_t visited = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~visited;
        visited |= frontier;
    }
    return visited == g.vertex_mask();
}

// Two-colorability via BFS layering, per component.
inline bool is_bipartite(const Graph& g) {
    std::uint64_t seen = 0;
    for (int s = 0; s < g.n(); ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t frontier = std::uint64_t{1} << s;
        seen |= frontier;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t scan = frontier;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                if (g.neighbors(v) & frontier) return false;  // edge inside one layer
                next |= g.neighbors(v);
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
    }
    return true;
}

namespace detail {

// Tomita-style branch and bound with a greedy-coloring bound. `cap` stops the
// search as soon as a clique of that size is found.
struct CliqueSearch {
    const Graph& g;
    int best = 0;
    int cap;

    explicit CliqueSearch(const Graph& g, int cap) : g(g), cap(cap) {}

    void expand(std::uint64_t candidates, int size) {
        if (best >= cap) return;
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        // Greedy coloring: classes[i] is an independent set; a vertex in class i
        // extends a clique by at most i+1 more vertices.
        int order[kMaxVertices];
        int color_of[kMaxVertices];
        std::uint64_t classes[kMaxVertices];
        int num_classes = 0, count = 0;
        std::uint64_t scan = candidates;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int c = 0;
            while (c < num_classes && (classes[c] & g.neighbors(v))) ++c;
            if (c == num_classes) classes[num_classes++] = 0;
            classes[c] |= std::uint64_t{1} << v;
            order[count] = v;
            color_of[count] = c;
            ++count;
        }
        // Sort candidates by color ascending (stable insertion; counts are small).
        for (int i = 1; i < count; ++i) {
            int v = order[i], c = color_of[i], j = i - 1;
            while (j >= 0 && color_of[j] > c) {
                order[j + 1] = order[j];
                color_of[j + 1] = color_of[j];
                --j;
            }
            order[j + 1] = v;
            color_of[j + 1] = c;
        }
        std::uint64_t remaining = candidates;
        for (int i = count - 1; i >= 0; --i) {
            if (size + color_of[i] + 1 <= best) return;
            int v = order[i];
            expand(remaining & g.neighbors(v), size + 1);
            if (best >= cap) return;
            remaining &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace detail

inline int clique_number(const Graph& g) {
    detail::CliqueSearch s(g, g.n() + 1);
    s.expand(g.vertex_mask(), 0);
    return s.best;
}

inline bool has_clique_of_size(const Graph& g, int size) {
    if (size <= 0) return true;
    if (size > g.n()) return false;
    detail::CliqueSearch s(g, size);
    s.expand(g.vertex_mask(), 0);
    return s.best >= size;
}

}  // namespace distk
