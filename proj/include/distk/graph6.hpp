#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "distk/graph.hpp"

namespace distk {

// Parse failure for graph6 text. One distinct kind per failure mode so
// callers (and tests) can tell them apart.
class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        BadHeader,               // missing or malformed size header
        VertexCountOutOfRange,   // n = 0 or n beyond the 64-vertex cap
        Truncated,               // body shorter than the size header demands
        TrailingData,            // extra bytes after the encoded graph
        BadCharacter,            // byte outside the printable range, or nonzero padding
    };

    Graph6Error(Kind kind, const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? "graph6 line " + std::to_string(line) + ": " + message
                                  : "graph6: " + message),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }  // 1-based; 0 when not from a stream

    Graph6Error with_line(std::size_t line) const {
        return Graph6Error(kind_, raw_message_or(*this), line);
    }

private:
    static std::string raw_message_or(const Graph6Error& e) {
        std::string w = e.what();
        auto pos = w.find(": ");
        return pos == std::string::npos ? w : w.substr(pos + 2);
    }

    Kind kind_;
    std::size_t line_;
};

namespace detail {

inline constexpr int kG6Offset = 63;  // printable characters are value + 63

inline int g6_body_bytes(int n) {
    int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace detail

// Strict standard graph6: size header (single byte 63+n for n <= 62, else
// '~' plus three 6-bit bytes), then the upper triangle of the adjacency
// matrix in column-major order packed into 6-bit chunks, each offset by 63.
inline Graph parse_graph6(std::string_view text) {
    using detail::kG6Offset;
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::BadHeader, "empty input");

    std::size_t pos = 0;
    auto next_byte = [&](const char* what) -> int {
        if (pos >= text.size())
            throw Graph6Error(Graph6Error::Kind::Truncated, std::string("missing ") + what);
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < kG6Offset || c > 126)
            throw Graph6Error(Graph6Error::Kind::BadCharacter,
                              "byte outside graph6 range in " + std::string(what));
        return c - kG6Offset;
    };

    long n;
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) {
        ++pos;
        if (pos + 3 > text.size())
            throw Graph6Error(Graph6Error::Kind::BadHeader, "incomplete extended size header");
        long hi = next_byte("size header");
        long mid = next_byte("size header");
        long lo = next_byte("size header");
        n = (hi << 12) | (mid << 6) | lo;
    } else if (first >= kG6Offset && first <= 125) {
        n = first - kG6Offset;
        ++pos;
    } else {
        throw Graph6Error(Graph6Error::Kind::BadHeader, "invalid size header byte");
    }

    if (n < 1 || n > kMaxVertices)
        throw Graph6Error(Graph6Error::Kind::VertexCountOutOfRange,
                          "vertex count " + std::to_string(n) + " outside supported range 1..64");

    Graph g(static_cast<int>(n));
    int value = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                value = next_byte("adjacency data");
                have = 6;
            }
            if ((value >> (have - 1)) & 1) g.add_edge(i, j);
            --have;
        }
    }
    if (have > 0 && (value & ((1 << have) - 1)) != 0)
        throw Graph6Error(Graph6Error::Kind::BadCharacter, "nonzero padding bits");
    if (pos != text.size())
        throw Graph6Error(Graph6Error::Kind::TrailingData, "trailing data after graph");
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    using detail::kG6Offset;
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    int value = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(value + kG6Offset));
                value = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((value << (6 - have)) + kG6Offset));
    return out;
}

}  // namespace distk
