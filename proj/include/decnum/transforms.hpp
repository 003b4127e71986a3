#pragma once

#include <vector>

#include "decnum/algos.hpp"
#include "decnum/graph.hpp"

namespace decnum {

/// Bipartite double cover. Vertex 2i is the primed copy of i and 2i+1 the
/// double-primed copy; the fixed layout lets callers project functions on the
/// cover back to the base graph.
inline Graph bipartite_double_cover(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(2 * g.edge_count()));
    for (auto [u, v] : g.edge_list()) {
        edges.emplace_back(2 * u, 2 * v + 1);
        edges.emplace_back(2 * v, 2 * u + 1);
    }
    return Graph::from_edges(2 * g.order(), edges);
}

/// u ~ v in the result iff 1 <= d_g(u,v) <= 2.
inline Graph square_adjacency(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    std::vector<char> near(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> touched;
        g.for_neighbors(v, [&](int u) {
            if (u > v && !near[u]) {
                near[u] = 1;
                touched.push_back(u);
            }
            g.for_neighbors(u, [&](int w) {
                if (w > v && !near[w]) {
                    near[w] = 1;
                    touched.push_back(w);
                }
            });
        });
        for (int u : touched) {
            edges.emplace_back(v, u);
            near[u] = 0;
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace decnum
