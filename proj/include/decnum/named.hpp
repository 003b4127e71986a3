#pragma once

#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e, "P" + std::to_string(n));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e, "C" + std::to_string(n));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e, "K" + std::to_string(n));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e, "K" + std::to_string(a) + "," + std::to_string(b));
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

/// Generalized Petersen graph GP(n,k): outer cycle 0..n-1, inner vertices
/// n..2n-1 with inner steps of k, spokes i -- n+i.
inline Graph generalized_petersen(int n, int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + k) % n);
        e.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, e);
}

inline Graph petersen() { return generalized_petersen(5, 2).with_name("Petersen"); }
inline Graph desargues() { return generalized_petersen(10, 3).with_name("Desargues"); }
inline Graph prism() { return generalized_petersen(3, 1).with_name("prism"); }
inline Graph cube_graph() { return generalized_petersen(4, 1).with_name("Q3"); }

/// Heawood graph: points u_i = vertices 0..6, lines w_j = vertices 7..13,
/// u_i ~ w_j iff j - i is in the planar difference set {0, 1, 3} mod 7.
inline Graph heawood() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 7; ++i)
        for (int d : {0, 1, 3}) e.emplace_back(i, 7 + (i + d) % 7);
    return Graph::from_edges(14, e, "Heawood");
}

}  // namespace decnum
