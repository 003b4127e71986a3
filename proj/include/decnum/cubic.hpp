#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "decnum/canonical.hpp"
#include "decnum/graph.hpp"

namespace decnum {

inline constexpr int kMinCubicOrder = 4;
inline constexpr int kMaxCubicOrder = 16;

namespace detail {

// Partial cubic graph on <= 16 vertices, one adjacency bitmask per vertex.
struct CubicState {
    int n = 0;
    std::array<uint16_t, 16> adj{};

    int degree(int v) const { return std::popcount(adj[v]); }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        adj[u] |= uint16_t(1u << v);
        adj[v] |= uint16_t(1u << u);
    }

    Graph materialize() const {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    // A fully saturated component on fewer than n vertices can never gain
    // another edge, so such a state only leads to disconnected graphs.
    bool has_closed_proper_component() const {
        uint32_t seen = 0;
        for (int s = 0; s < n; ++s) {
            if ((seen >> s) & 1) continue;
            uint32_t comp = 1u << s;
            uint32_t frontier = comp;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                uint32_t fresh = adj[v] & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            bool closed = true;
            uint32_t it = comp;
            while (it) {
                int v = std::countr_zero(it);
                it &= it - 1;
                if (degree(v) < 3) {
                    closed = false;
                    break;
                }
            }
            if (closed && std::popcount(comp) < n) return true;
        }
        return false;
    }
};

}  // namespace detail

/// Stream every connected cubic graph of order n exactly once up to
/// isomorphism, in a deterministic order. Search: repeatedly saturate one
/// deficient vertex (highest degree, lowest index) by choosing its missing
/// neighbors in every possible way; states are deduplicated by canonical
/// form, which keeps the tree isomorph-free without canonical-augmentation
/// bookkeeping. Plenty fast at these orders; larger orders come in as
/// externally generated graph6 files.
template <class Sink>
void connected_cubic(int n, Sink&& sink) {
    if (n % 2 != 0 || n < kMinCubicOrder || n > kMaxCubicOrder)
        throw std::invalid_argument("connected_cubic supports even n in [" +
                                    std::to_string(kMinCubicOrder) + "," +
                                    std::to_string(kMaxCubicOrder) + "]");

    std::unordered_set<std::string> visited;
    detail::CubicState root;
    root.n = n;

    std::function<void(const detail::CubicState&)> expand =
        [&](const detail::CubicState& s) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (s.degree(v) >= 3) continue;
                if (pick < 0 || s.degree(v) > s.degree(pick)) pick = v;
            }
            if (pick < 0) {
                sink(s.materialize());
                return;
            }
            int need = 3 - s.degree(pick);
            std::vector<int> cand;
            for (int u = 0; u < n; ++u)
                if (u != pick && !s.has_edge(pick, u) && s.degree(u) < 3) cand.push_back(u);
            if (static_cast<int>(cand.size()) < need) return;

            std::vector<int> sel;
            std::function<void(size_t)> choose = [&](size_t from) {
                if (static_cast<int>(sel.size()) == need) {
                    detail::CubicState child = s;
                    for (int u : sel) child.add_edge(pick, u);
                    if (child.has_closed_proper_component()) return;
                    auto cert = canonical_form(child.materialize());
                    if (visited.insert(std::move(cert.bytes)).second) expand(child);
                    return;
                }
                for (size_t i = from; i < cand.size(); ++i) {
                    sel.push_back(cand[i]);
                    choose(i + 1);
                    sel.pop_back();
                }
            };
            choose(0);
        };
    expand(root);
}

inline long long count_connected_cubic(int n) {
    long long c = 0;
    connected_cubic(n, [&](const Graph&) { ++c; });
    return c;
}

}  // namespace decnum
