#pragma once

// Small named graphs shared across tests.

#include "distk/graph.hpp"

namespace fixtures {

inline distk::Graph path(int n) {
    distk::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline distk::Graph cycle(int n) {
    distk::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline distk::Graph complete(int n) {
    distk::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline distk::Graph complete_bipartite(int a, int b) {
    distk::Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline distk::Graph empty(int n) { return distk::Graph(n); }

inline distk::Graph star(int leaves) {
    distk::Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

// Outer 5-cycle, inner pentagram, spokes.
inline distk::Graph petersen() {
    distk::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

inline distk::Graph complete_bipartite_minus_matching(int m) {
    distk::Graph g(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j) g.add_edge(i, m + j);
    return g;
}

}  // namespace fixtures
