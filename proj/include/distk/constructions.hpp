#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "distk/canonical.hpp"
#include "distk/graph.hpp"

namespace distk {

// ---- construction specs ----------------------------------------------------

struct TuranSpec {
    int n, r;
};

// Modified Turan construction for the distance-two problem: T(n-1,2) with
// bipartition (A,B), a fixed vertex a1 in A, a non-trivial split B = B' u B'',
// the a1-B' edges removed and a new vertex a2 joined to {a1} u B'. The spec
// describes that auxiliary graph; build() returns its complement, which is
// the extremal graph itself.
struct G2ExtremalSpec {
    int n, size_a, size_b_prime;
};

// Central path on k-1 vertices with a leaves at one end and b at the other,
// so cross leaf pairs are at distance exactly k.
struct DoubleBroomSpec {
    int n, k, a, b;
};

// Even k >= 4: a center joined to one endpoint of each of t paths on (k-2)/2
// vertices, leaves at the far endpoints. Odd k >= 3: a t-clique with a path
// on (k-3)/2 vertices off each clique vertex; for k = 3 the paths are empty
// and leaves attach directly to the clique.
struct TBroomSpec {
    int k, t;
    std::vector<int> leaf_counts;
};

// Star center with `legs` spokes; the remaining n-1-legs vertices attach to
// the spoke vertices per attachment_counts, giving legs of length <= 2.
struct SpiderSpec {
    int n, legs;
    std::vector<int> attachment_counts;
};

using ConstructionSpec =
    std::variant<TuranSpec, G2ExtremalSpec, DoubleBroomSpec, TBroomSpec, SpiderSpec>;

// ---- builders ---------------------------------------------------------------

inline Graph build_turan(int n, int r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("turan: class count must satisfy 1 <= r <= n");
    Graph g(n);
    std::vector<int> part(n);
    int q = n / r, rem = n % r, v = 0;
    for (int p = 0; p < r; ++p) {
        int size = q + (p < rem ? 1 : 0);
        for (int i = 0; i < size; ++i) part[v++] = p;
    }
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[u] != part[w]) g.add_edge(u, w);
    return g;
}

// The auxiliary (pre-complement) graph of the G2 extremal construction.
// Vertex order: A (a1 first), B', B'', then a2.
inline Graph g2_extremal_auxiliary(int n, int size_a, int size_b_prime) {
    if (n < 5) throw std::invalid_argument("g2-extremal: n >= 5 required");
    int size_b = n - 1 - size_a;
    if (size_a < 1 || std::abs(size_a - size_b) > 1)
        throw std::invalid_argument(
            "g2-extremal: (size_a, n-1-size_a) must be a balanced Turan bipartition");
    if (size_b_prime < 1 || size_b_prime > size_b - 1)
        throw std::invalid_argument(
            "g2-extremal: the split of B must be non-trivial (1 <= size_b_prime <= |B|-1)");
    Graph g(n);
    int a1 = 0;
    int b_begin = size_a;
    int b_prime_end = size_a + size_b_prime;
    int a2 = n - 1;
    for (int a = 0; a < size_a; ++a)
        for (int b = b_begin; b < n - 1; ++b)
            if (!(a == a1 && b < b_prime_end)) g.add_edge(a, b);
    g.add_edge(a2, a1);
    for (int b = b_begin; b < b_prime_end; ++b) g.add_edge(a2, b);
    return g;
}

inline Graph build_g2_extremal(int n, int size_a, int size_b_prime) {
    return complement(g2_extremal_auxiliary(n, size_a, size_b_prime));
}

inline Graph build_double_broom(int n, int k, int a, int b) {
    if (k < 2) throw std::invalid_argument("double-broom: k >= 2 required");
    if (a < 1 || b < 1) throw std::invalid_argument("double-broom: leaf counts a, b must be >= 1");
    if (a + b + (k - 1) != n)
        throw std::invalid_argument("double-broom: sizes must satisfy a + b + (k-1) = n");
    Graph g(n);
    for (int i = 0; i + 1 < k - 1; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < a; ++i) g.add_edge(0, k - 1 + i);
    for (int i = 0; i < b; ++i) g.add_edge(k - 2, k - 1 + a + i);
    return g;
}

inline Graph build_t_broom(int k, int t, std::span<const int> leaf_counts) {
    bool even_ok = k % 2 == 0 && k >= 4;
    bool odd_ok = k % 2 == 1 && k >= 3;
    if (!even_ok && !odd_ok)
        throw std::invalid_argument("t-broom: k must be even >= 4 or odd >= 3");
    if (t < 1) throw std::invalid_argument("t-broom: t >= 1 required");
    if (static_cast<int>(leaf_counts.size()) != t)
        throw std::invalid_argument("t-broom: leaf_counts must have exactly t entries");
    for (int c : leaf_counts)
        if (c < 1) throw std::invalid_argument("t-broom: every arm needs at least one leaf");

    int centers = k % 2 == 0 ? 1 : t;
    int path_len = k % 2 == 0 ? (k - 2) / 2 : (k - 3) / 2;
    long long total = centers + static_cast<long long>(t) * path_len +
                      std::accumulate(leaf_counts.begin(), leaf_counts.end(), 0LL);
    if (total > kMaxVertices)
        throw std::invalid_argument("t-broom: total vertex count exceeds the 64-vertex cap");

    Graph g(static_cast<int>(total));
    if (k % 2 == 1)
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    int next = centers;
    for (int arm = 0; arm < t; ++arm) {
        int attach = k % 2 == 0 ? 0 : arm;
        for (int i = 0; i < path_len; ++i) {
            g.add_edge(attach, next);
            attach = next++;
        }
        for (int i = 0; i < leaf_counts[arm]; ++i) g.add_edge(attach, next++);
    }
    return g;
}

inline Graph build_spider(int n, int legs, std::span<const int> attachment_counts) {
    if (legs != n / 2 && legs != (n + 1) / 2)
        throw std::invalid_argument("spider: legs must be floor(n/2) or floor((n+1)/2)");
    if (static_cast<int>(attachment_counts.size()) != legs)
        throw std::invalid_argument("spider: attachment_counts must have one entry per leg");
    long long feet = 0;
    for (int c : attachment_counts) {
        if (c < 0) throw std::invalid_argument("spider: attachment counts must be >= 0");
        feet += c;
    }
    if (feet != n - 1 - legs)
        throw std::invalid_argument("spider: attachment counts must sum to n - 1 - legs");
    Graph g(n);
    for (int leg = 0; leg < legs; ++leg) g.add_edge(0, 1 + leg);
    int next = 1 + legs;
    for (int leg = 0; leg < legs; ++leg)
        for (int i = 0; i < attachment_counts[leg]; ++i) g.add_edge(1 + leg, next++);
    return g;
}

// Deals the n-1-legs attachment vertices one per leg cyclically.
inline std::vector<int> spider_round_robin_attachment(int n, int legs) {
    if (legs < 1) throw std::invalid_argument("spider: legs >= 1 required");
    int feet = n - 1 - legs;
    if (feet < 0) throw std::invalid_argument("spider: n too small for that many legs");
    std::vector<int> counts(legs, feet / legs);
    for (int i = 0; i < feet % legs; ++i) ++counts[i];
    return counts;
}

inline Graph build(const ConstructionSpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TuranSpec>) return build_turan(s.n, s.r);
            if constexpr (std::is_same_v<T, G2ExtremalSpec>)
                return build_g2_extremal(s.n, s.size_a, s.size_b_prime);
            if constexpr (std::is_same_v<T, DoubleBroomSpec>)
                return build_double_broom(s.n, s.k, s.a, s.b);
            if constexpr (std::is_same_v<T, TBroomSpec>)
                return build_t_broom(s.k, s.t, s.leaf_counts);
            if constexpr (std::is_same_v<T, SpiderSpec>)
                return build_spider(s.n, s.legs, s.attachment_counts);
        },
        spec);
}

// ---- closed-form bound oracles ----------------------------------------------

// Maximum pair count at distance two with triangle-free distance graph.
inline long long ex2_bound(int n) {
    if (n < 5) throw std::invalid_argument("ex2_bound: n >= 5 required");
    long long m = n - 1;
    return m * m / 4 + 1;
}

struct Ex3Bound {
    long long value;
    bool proven;  // the closed form is established only from n >= 18
};

inline Ex3Bound ex3_bound(int n) {
    if (n < 4) throw std::invalid_argument("ex3_bound: n >= 4 required");
    long long m = n - 2;
    return {m * m / 4, n >= 18};
}

struct Rational {
    long long num, den;

    long long floor_value() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact (n-k+1)^2 / 4, reduced.
inline Rational tu_bound(int n, int k) {
    if (k < 3) throw std::invalid_argument("tu_bound: k >= 3 required");
    if (n < k + 1) throw std::invalid_argument("tu_bound: n >= k + 1 required");
    long long s = n - k + 1;
    long long num = s * s;
    if (num % 4 == 0) return {num / 4, 1};
    return {num, 4};
}

// Maximum edge count of a triangle-free non-bipartite graph.
inline long long kp_nonbipartite_bound(int n) {
    if (n < 5) throw std::invalid_argument("kp_nonbipartite_bound: n >= 5 required");
    long long m = n - 1;
    return m * m / 4 + 1;
}

// ---- extremal family enumeration ---------------------------------------------

// All G2-extremal construction instances for this n: every non-trivial split
// of B and, when n-1 is odd, both orientations of the bipartition relative to
// a1. Deduplicated by canonical form, ordered by certificate.
inline std::vector<Graph> enumerate_g2_extremal_family(int n) {
    if (n < 5) throw std::invalid_argument("enumerate_g2_extremal_family: n >= 5 required");
    std::map<std::string, Graph> by_cert;
    int lo = (n - 1) / 2, hi = n / 2;
    std::vector<int> orientations{lo};
    if (hi != lo) orientations.push_back(hi);
    for (int size_a : orientations) {
        int size_b = n - 1 - size_a;
        for (int bp = 1; bp <= size_b - 1; ++bp) {
            Graph g = build_g2_extremal(n, size_a, bp);
            by_cert.emplace(canonical_form(g).bytes, g);
        }
    }
    std::vector<Graph> out;
    out.reserve(by_cert.size());
    for (auto& [cert, g] : by_cert) out.push_back(g);
    return out;
}

}  // namespace distk
