#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "distk/graph6.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using distk::emit_graph6;
using distk::Graph;
using distk::Graph6Error;
using distk::parse_graph6;

TEST_CASE("reference encodings") {
    // Cross-checked against standard graph6 tooling.
    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.n() == 5);
    CHECK(distk::edge_count(empty5) == 0);
    CHECK(emit_graph6(fixtures::empty(5)) == "D??");

    CHECK(emit_graph6(fixtures::complete(2)) == "A_");
    CHECK(parse_graph6("A_") == fixtures::complete(2));

    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@").n() == 1);
}

TEST_CASE("round trip identity") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = brute::random_graph(n, 0.4, rng);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
    // Long size header range.
    for (int n : {62, 63, 64}) {
        Graph g = brute::random_graph(n, 0.1, rng);
        std::string line = emit_graph6(g);
        if (n >= 63) CHECK(line[0] == '~');
        CHECK(parse_graph6(line) == g);
    }
}

TEST_CASE("parse errors are distinct") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph6(text);
        } catch (const Graph6Error& e) {
            return e.kind();
        }
        throw std::runtime_error("expected a parse failure for: " + text);
    };

    CHECK(kind_of("") == Graph6Error::Kind::BadHeader);
    CHECK(kind_of(std::string(1, char(30))) == Graph6Error::Kind::BadHeader);
    CHECK(kind_of("~?") == Graph6Error::Kind::BadHeader);

    CHECK(kind_of("?") == Graph6Error::Kind::VertexCountOutOfRange);  // n = 0
    // n = 65 in the extended header.
    std::string too_big = "~";
    too_big += char(63);
    too_big += char(64);
    too_big += char(64);
    CHECK(kind_of(too_big) == Graph6Error::Kind::VertexCountOutOfRange);

    CHECK(kind_of("D?") == Graph6Error::Kind::Truncated);  // body too short for n = 5
    CHECK(kind_of("A_?") == Graph6Error::Kind::TrailingData);
    CHECK(kind_of("D?? ") == Graph6Error::Kind::TrailingData);

    std::string bad_body = "A";
    bad_body += char(32);
    CHECK(kind_of(bad_body) == Graph6Error::Kind::BadCharacter);
    CHECK(kind_of("A~") == Graph6Error::Kind::BadCharacter);  // nonzero padding
}
