#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "distk/canonical.hpp"
#include "distk/constructions.hpp"
#include "distk/distance.hpp"
#include "distk/graph.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using distk::canonical_analyze;
using distk::canonical_form;
using distk::Graph;

TEST_CASE("relabelings of the same graph share a certificate") {
    Graph p3a(3);
    p3a.add_edge(0, 1);
    p3a.add_edge(1, 2);
    Graph p3b(3);
    p3b.add_edge(2, 0);
    p3b.add_edge(0, 1);
    CHECK(canonical_form(p3a) == canonical_form(p3b));
    CHECK(canonical_form(p3a) != canonical_form(fixtures::complete(3)));
}

TEST_CASE("certificate is invariant under random relabelings") {
    std::mt19937_64 rng(424242);
    for (int n = 1; n <= 9; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            Graph g = brute::random_graph(n, 0.15 + 0.1 * (trial % 8), rng);
            auto cert = canonical_form(g);
            for (int rep = 0; rep < 8; ++rep) {
                auto perm = brute::random_permutation(n, rng);
                CHECK(canonical_form(distk::permuted(g, perm)) == cert);
            }
        }
    }
}

TEST_CASE("distinct certificates over all labeled graphs on four vertices") {
    // Oracle: pairwise isomorphism by exhaustive permutation.
    std::set<std::uint64_t> oracle_classes;
    std::set<std::string> certs;
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
        Graph g = brute::from_bits(4, bits);
        oracle_classes.insert(brute::canonical_bits(4, bits));
        certs.insert(canonical_form(g).bytes);
    }
    CHECK(oracle_classes.size() == 11);
    CHECK(certs.size() == 11);
}

TEST_CASE("certificates agree with the exhaustive-permutation oracle") {
    std::mt19937_64 rng(777);
    for (int n = 2; n <= 7; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Graph a = brute::random_graph(n, 0.4, rng);
            Graph b = (trial % 3 == 0) ? distk::permuted(a, brute::random_permutation(n, rng))
                                       : brute::random_graph(n, 0.4, rng);
            CHECK(distk::is_isomorphic(a, b) == brute::isomorphic(a, b));
        }
    }
}

TEST_CASE("named isomorphism examples") {
    auto c5 = fixtures::cycle(5);
    CHECK(distk::is_isomorphic(c5, distk::complement(c5)));

    auto k44 = fixtures::complete_bipartite(4, 4);
    auto k44_minus = fixtures::complete_bipartite_minus_matching(4);
    CHECK_FALSE(distk::is_isomorphic(k44, k44_minus));

    // The two distance-three extremal constructions at n = 9.
    auto broom = distk::build_double_broom(9, 3, 3, 4);
    auto spider = distk::build_spider(9, 4, std::vector<int>{1, 1, 1, 1});
    auto broom3 = distk::distance_k_graph(broom, 3);
    auto spider3 = distk::distance_k_graph(spider, 3);
    CHECK(distk::edge_count(broom3) == 12);
    CHECK(distk::edge_count(spider3) == 12);
    CHECK_FALSE(distk::is_isomorphic(broom3, spider3));
}

TEST_CASE("canonical relabeling reproduces the certificate") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = brute::random_graph(n, 0.45, rng);
        Graph canon = distk::canonical_relabel(g);
        CHECK(distk::emit_graph6(canon) == canonical_form(g).bytes);
        CHECK(brute::isomorphic(g, canon));
    }
}

TEST_CASE("last-position orbit is a full automorphism orbit") {
    // P3: the minimal labeling ends at the center.
    Graph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK(canonical_analyze(p3).last_orbit == (std::uint64_t{1} << 1));

    // Edge plus isolated vertex: last position can hold either endpoint.
    Graph e_plus(3);
    e_plus.add_edge(0, 2);
    CHECK(canonical_analyze(e_plus).last_orbit == ((std::uint64_t{1} << 0) | (std::uint64_t{1} << 2)));

    // Empty graph: every vertex.
    CHECK(canonical_analyze(fixtures::empty(5)).last_orbit == 0b11111u);

    // Oracle check: v is in the orbit iff some automorphism maps the
    // canonical-last vertex to v.
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = brute::random_graph(n, 0.5, rng);
        auto analysis = canonical_analyze(g);
        int last = analysis.order[n - 1];
        std::uint64_t orbit = 0;
        for (const auto& perm : brute::all_permutations(n)) {
            bool automorphism = true;
            for (int i = 0; i < n && automorphism; ++i)
                for (int j = i + 1; j < n && automorphism; ++j)
                    automorphism = g.adjacent(i, j) == g.adjacent(perm[i], perm[j]);
            if (automorphism) orbit |= std::uint64_t{1} << perm[last];
        }
        CHECK(analysis.last_orbit == orbit);
    }
}
