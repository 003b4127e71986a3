#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "decnum/graph.hpp"
#include "decnum/transforms.hpp"

namespace decnum {

/// Proper coloring of square_adjacency(g): vertices within distance 2 get
/// distinct colors. Heuristic: greedy along a degeneracy order of the square,
/// then recoloring passes that try to empty the smallest classes (aiming for
/// 8 classes on cubic inputs, with no guarantee). Colors are 0..k-1.
inline std::vector<int> two_distance_coloring(const Graph& g) {
    const Graph sq = square_adjacency(g);
    const int n = sq.order();

    // Degeneracy order: repeatedly remove a minimum-degree vertex.
    std::vector<int> deg(n), order;
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = sq.degree(v);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        gone[pick] = 1;
        order.push_back(pick);
        sq.for_neighbors(pick, [&](int u) {
            if (!gone[u]) --deg[u];
        });
    }
    std::reverse(order.begin(), order.end());

    std::vector<int> color(n, -1);
    int classes = 0;
    std::vector<char> used;
    auto smallest_free = [&](int v) {
        used.assign(classes + 1, 0);
        sq.for_neighbors(v, [&](int u) {
            if (color[u] >= 0) used[std::min(color[u], classes)] = 1;
        });
        int c = 0;
        while (used[c]) ++c;
        return c;
    };
    for (int v : order) {
        int c = smallest_free(v);
        color[v] = c;
        classes = std::max(classes, c + 1);
    }

    // Recolor passes: try to dissolve the smallest class into the others.
    for (bool progress = true; progress && classes > 1;) {
        progress = false;
        std::vector<int> sizes(classes, 0);
        for (int v = 0; v < n; ++v) ++sizes[color[v]];
        int victim = 0;
        for (int c = 1; c < classes; ++c)
            if (sizes[c] < sizes[victim]) victim = c;
        std::vector<std::pair<int, int>> moves;
        bool all_movable = true;
        for (int v = 0; v < n && all_movable; ++v) {
            if (color[v] != victim) continue;
            int dest = -1;
            used.assign(classes, 0);
            sq.for_neighbors(v, [&](int u) {
                if (color[u] >= 0 && u != v) used[color[u]] = 1;
            });
            for (int c = 0; c < classes && dest < 0; ++c)
                if (c != victim && !used[c]) dest = c;
            if (dest < 0)
                all_movable = false;
            else
                moves.emplace_back(v, dest);
        }
        if (all_movable && !moves.empty()) {
            for (auto [v, c] : moves) color[v] = c;
            // Renumber so colors stay contiguous.
            std::vector<int> remap(classes, -1);
            int next = 0;
            for (int v : order)
                if (remap[color[v]] < 0) remap[color[v]] = next++;
            for (int v = 0; v < n; ++v) color[v] = remap[color[v]];
            classes = next;
            progress = true;
        }
    }
    return color;
}

inline int color_class_count(const std::vector<int>& coloring) {
    return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
}

}  // namespace decnum
