#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace distk {

inline constexpr int kMaxVertices = 64;

// Simple undirected graph on labeled vertices 0..n-1. One 64-bit adjacency
// row per vertex, so neighborhood operations are single-word bit ops.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count must satisfy 1 <= n <= " +
                                        std::to_string(kMaxVertices));
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    // Neighborhood of v as a bitmask.
    std::uint64_t neighbors(int v) const { return rows_[v]; }

    int degree(int v) const { return std::popcount(rows_[v]); }

    // Mask with one bit per vertex.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_{};
};

inline long long edge_count(const Graph& g) {
    long long twice = 0;
    for (int v = 0; v < g.n(); ++v) twice += std::popcount(g.neighbors(v));
    return twice / 2;
}

inline Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u) {
        std::uint64_t row = ~g.neighbors(u) & g.vertex_mask() & ~(std::uint64_t{1} << u);
        for (int v = u + 1; v < g.n(); ++v)
            if ((row >> v) & 1u) h.add_edge(u, v);
    }
    return h;
}

// Relabels g: vertex v becomes perm[v].
inline Graph permuted(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("permuted: permutation size must equal vertex count");
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

// g plus one fresh vertex whose neighborhood is neighbor_mask.
inline Graph with_added_vertex(const Graph& g, std::uint64_t neighbor_mask) {
    Graph h(g.n() + 1);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) h.add_edge(u, v);
    int w = g.n();
    for (int v = 0; v < g.n(); ++v)
        if ((neighbor_mask >> v) & 1u) h.add_edge(v, w);
    return h;
}

}  // namespace distk
