#pragma once

#include <optional>
#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

/// Distance label for vertices unreachable from the BFS source.
inline constexpr int kUnreached = -1;

inline std::vector<int> distances_from(const Graph& g, int src) {
    if (src < 0 || src >= g.order()) throw std::invalid_argument("BFS source out of range");
    std::vector<int> dist(g.order(), kUnreached);
    std::vector<int> queue;
    queue.reserve(g.order());
    dist[src] = 0;
    queue.push_back(src);
    for (size_t h = 0; h < queue.size(); ++h) {
        int v = queue[h];
        g.for_neighbors(v, [&](int u) {
            if (dist[u] == kUnreached) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        });
    }
    return dist;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t h = 0; h < comp.size(); ++h)
            g.for_neighbors(comp[h], [&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            });
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    auto dist = distances_from(g, 0);
    for (int d : dist)
        if (d == kUnreached) return false;
    return true;
}

/// Sides of a 2-coloring (0/1 per vertex), or empty if no bipartition exists.
/// Disconnected inputs are fine; each component is colored independently.
inline std::optional<std::vector<uint8_t>> is_bipartite(const Graph& g) {
    std::vector<int8_t> side(g.order(), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        queue.assign(1, s);
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            bool odd = false;
            g.for_neighbors(v, [&](int u) {
                if (side[u] < 0) {
                    side[u] = static_cast<int8_t>(1 - side[v]);
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    return std::vector<uint8_t>(side.begin(), side.end());
}

inline bool is_cubic(const Graph& g) { return g.is_regular(3); }

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.order() - 1;
}

namespace detail {

// Connectivity of g restricted to vertices not in `removed`.
inline bool connected_avoiding(const Graph& g, const std::vector<char>& removed) {
    int n = g.order(), start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    for (size_t h = 0; h < queue.size(); ++h)
        g.for_neighbors(queue[h], [&](int u) {
            if (!seen[u] && !removed[u]) {
                seen[u] = 1;
                ++reached;
                queue.push_back(u);
            }
        });
    return reached == alive;
}

}  // namespace detail

/// True when no set of at most two vertices disconnects g (n >= 4 assumed
/// interesting; smaller orders fall back to the usual conventions).
inline bool is_three_connected(const Graph& g) {
    int n = g.order();
    if (n < 4) return n >= 1 && g.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
    if (!is_connected(g) || g.min_degree() < 3) return false;
    std::vector<char> removed(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            removed[a] = removed[b] = 1;
            bool ok = detail::connected_avoiding(g, removed);
            removed[a] = removed[b] = 0;
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace decnum
