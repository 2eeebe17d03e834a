#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "distk/distance.hpp"
#include "distk/graph.hpp"
#include "distk/properties.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using distk::DistanceMatrix;
using distk::Graph;

TEST_CASE("graph type enforces its invariants") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    g.add_edge(0, 2);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
}

TEST_CASE("all_pairs_distances on named graphs") {
    auto p4 = fixtures::path(4);
    auto d = distk::all_pairs_distances(p4);
    CHECK(d.at(0, 3) == 3);
    CHECK(d.at(3, 0) == 3);
    CHECK(d.at(1, 2) == 1);

    auto two = fixtures::empty(2);
    CHECK(distk::all_pairs_distances(two).at(0, 1) == DistanceMatrix::kUnreachable);

    auto k4 = fixtures::complete(4);
    auto dk4 = distk::all_pairs_distances(k4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(dk4.at(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("all_pairs_distances agrees with Floyd-Warshall") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = brute::random_graph(n, 0.1 + 0.2 * (trial % 5), rng);
        auto fast = distk::all_pairs_distances(g);
        auto slow = brute::floyd_warshall(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (slow[u][v] >= brute::kInfinity)
                    CHECK(fast.at(u, v) == DistanceMatrix::kUnreachable);
                else
                    CHECK(static_cast<int>(fast.at(u, v)) == slow[u][v]);
            }
    }
}

TEST_CASE("distance_k_graph basics") {
    CHECK_THROWS_AS(distk::distance_k_graph(fixtures::path(3), 0), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = brute::random_graph(3 + static_cast<int>(rng() % 6), 0.4, rng);
        CHECK(distk::distance_k_graph(g, 1) == g);
    }

    auto p4_3 = distk::distance_k_graph(fixtures::path(4), 3);
    CHECK(distk::edge_count(p4_3) == 1);
    CHECK(p4_3.adjacent(0, 3));

    auto c5_2 = distk::distance_k_graph(fixtures::cycle(5), 2);
    CHECK(brute::isomorphic(c5_2, fixtures::cycle(5)));
}

TEST_CASE("each connected pair sits in exactly one distance class") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = brute::random_graph(n, 0.35, rng);
        auto d = distk::all_pairs_distances(g);
        long long connected_pairs = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (d.at(u, v) != DistanceMatrix::kUnreachable) ++connected_pairs;
        long long sum = 0;
        for (int k = 1; k < n; ++k) {
            Graph gk = distk::distance_k_graph(g, k);
            sum += distk::edge_count(gk);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    CHECK(gk.adjacent(u, v) == (d.at(u, v) == k));
        }
        CHECK(sum == connected_pairs);
    }
}

TEST_CASE("diameter two graphs have complementary distance-two graph") {
    std::mt19937_64 rng(123);
    int seen = 0;
    for (int trial = 0; trial < 400 && seen < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = brute::random_graph(n, 0.55, rng);
        auto diam = distk::diameter(g);
        if (!diam || *diam > 2) continue;
        ++seen;
        CHECK(distk::distance_k_graph(g, 2) == distk::complement(g));
    }
    CHECK(seen >= 20);
}

TEST_CASE("edge_count on named graphs") {
    CHECK(distk::edge_count(fixtures::complete(5)) == 10);
    CHECK(distk::edge_count(fixtures::empty(4)) == 0);
    CHECK(distk::edge_count(fixtures::cycle(5)) == 5);
}

TEST_CASE("complement behaves") {
    CHECK(brute::isomorphic(distk::complement(fixtures::cycle(5)), fixtures::cycle(5)));
    CHECK(distk::edge_count(distk::complement(fixtures::complete(6))) == 0);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = brute::random_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
        CHECK(distk::complement(distk::complement(g)) == g);
    }
}

TEST_CASE("triangle detection") {
    CHECK(distk::is_triangle_free(fixtures::cycle(5)));
    CHECK_FALSE(distk::is_triangle_free(fixtures::complete(3)));
    CHECK(distk::is_triangle_free(fixtures::complete_bipartite(3, 3)));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = brute::random_graph(3 + static_cast<int>(rng() % 6), 0.3, rng);
        CHECK(distk::is_triangle_free(g) == !brute::has_triangle_triples(g));
        CHECK(distk::is_triangle_free(g) == (distk::clique_number(g) <= 2));
    }
}

TEST_CASE("clique number") {
    CHECK(distk::clique_number(fixtures::complete(5)) == 5);
    CHECK(distk::clique_number(fixtures::cycle(5)) == 2);
    CHECK(distk::clique_number(fixtures::empty(3)) == 1);

    // Brute force over all vertex triples: Petersen has an edge but no triangle.
    auto pet = fixtures::petersen();
    CHECK_FALSE(brute::has_triangle_triples(pet));
    CHECK(distk::edge_count(pet) > 0);
    CHECK(distk::clique_number(pet) == 2);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = brute::random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
        CHECK(distk::clique_number(g) == brute::max_clique_subsets(g));
    }
    CHECK(distk::has_clique_of_size(fixtures::complete(4), 4));
    CHECK_FALSE(distk::has_clique_of_size(fixtures::cycle(6), 3));
}

TEST_CASE("bipartiteness") {
    CHECK(distk::is_bipartite(fixtures::cycle(4)));
    CHECK_FALSE(distk::is_bipartite(fixtures::cycle(5)));
    CHECK(distk::is_bipartite(fixtures::empty(1)));
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = brute::random_graph(2 + static_cast<int>(rng() % 7), 0.35, rng);
        CHECK(distk::is_bipartite(g) == brute::bipartite_colorings(g));
        CHECK(distk::is_connected(g) == brute::connected_reachability(g));
    }
}
