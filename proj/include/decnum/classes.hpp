#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <string_view>

#include "decnum/cubic.hpp"
#include "decnum/graph6.hpp"
#include "decnum/trees.hpp"

namespace decnum {

/// Which family of graphs a table/verify run iterates.
struct GraphClassSpec {
    enum class Kind { FreeTrees, ConnectedCubic, Graph6File };
    Kind kind = Kind::FreeTrees;
    std::string path;  // Graph6File only

    static std::optional<GraphClassSpec> parse(std::string_view s) {
        if (s == "trees") return GraphClassSpec{Kind::FreeTrees, {}};
        if (s == "cubic") return GraphClassSpec{Kind::ConnectedCubic, {}};
        if (s.substr(0, 3) == "g6:") return GraphClassSpec{Kind::Graph6File, std::string(s.substr(3))};
        return std::nullopt;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::FreeTrees: return "trees";
            case Kind::ConnectedCubic: return "cubic";
            default: return "g6:" + path;
        }
    }
};

template <class Sink>
void read_graph6_file(const std::string& path, Sink&& sink) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    for_each_graph6(in, sink);
}

/// Stream the class members of order n in the class's deterministic order.
/// For graph6 files the file order is kept and other orders are skipped.
template <class Sink>
void for_each_in_class(const GraphClassSpec& spec, int n, Sink&& sink) {
    switch (spec.kind) {
        case GraphClassSpec::Kind::FreeTrees:
            free_trees(n, sink);
            break;
        case GraphClassSpec::Kind::ConnectedCubic:
            if (n % 2 != 0) break;  // no cubic graphs of odd order
            connected_cubic(n, sink);
            break;
        case GraphClassSpec::Kind::Graph6File:
            read_graph6_file(spec.path, [&](const Graph& g) {
                if (g.order() == n) sink(g);
            });
            break;
    }
}

}  // namespace decnum
