#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

/// Parse failure for a graph6 line; `offset` is the byte position within the
/// line (after any header has been stripped).
struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(std::string msg, size_t offset)
        : std::runtime_error(std::move(msg) + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    size_t offset;
};

namespace detail {

inline int g6_byte(std::string_view s, size_t i) {
    if (i >= s.size()) throw Graph6ParseError("graph6 line truncated", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw Graph6ParseError("graph6 character out of range 63..126", i);
    return c - 63;
}

}  // namespace detail

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line.remove_prefix(kGraph6Header.size());
    if (line.empty()) throw Graph6ParseError("empty graph6 input", 0);

    size_t pos = 0;
    long long n;
    if (detail::g6_byte(line, 0) != 63) {
        n = detail::g6_byte(line, pos++);
    } else if (line.size() >= 2 && detail::g6_byte(line, 1) != 63) {
        n = 0;
        ++pos;
        for (int k = 0; k < 3; ++k) n = (n << 6) | detail::g6_byte(line, pos++);
    } else {
        n = 0;
        pos += 2;
        for (int k = 0; k < 6; ++k) n = (n << 6) | detail::g6_byte(line, pos++);
    }
    if (n < 1 || n > kMaxVertices)
        throw Graph6ParseError("graph6 order " + std::to_string(n) + " outside supported [1," +
                                   std::to_string(kMaxVertices) + "]",
                               0);

    long long nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != need)
        throw Graph6ParseError("graph6 line has wrong length (expected " +
                                   std::to_string(pos + need) + " bytes, got " +
                                   std::to_string(line.size()) + ")",
                               line.size() < pos + need ? line.size() : pos + need);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (bit % 6 == 0) cur = detail::g6_byte(line, pos + bit / 6);
            if ((cur >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

/// Parse failure inside a multi-line graph6 stream, carrying the line number.
struct Graph6FileError : std::runtime_error {
    Graph6FileError(std::string msg, long long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)),
          line(line) {}
    long long line;
};

/// Stream graphs out of `in`, one graph6 line at a time. CRs from CRLF input
/// are tolerated; a bare `>>graph6<<` header line is skipped.
template <class Sink>
void for_each_graph6(std::istream& in, Sink&& sink) {
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == kGraph6Header) continue;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        try {
            sink(parse_graph6(line));
        } catch (const Graph6ParseError& e) {
            throw Graph6FileError(e.what(), lineno);
        }
    }
}

}  // namespace decnum
