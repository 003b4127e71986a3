#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

inline constexpr int kMaxTreeOrder = 20;

namespace detail {

// Canonical rooted trees as preorder level sequences (root at level 0) with
// children blocks in non-increasing lexicographic order. The catalog holds
// every canonical sequence up to a size cap, globally sorted in decreasing
// lexicographic order; free-tree generation only ever needs subtrees of size
// at most floor(n/2), so the catalog stays tiny.
struct RootedCatalog {
    std::vector<std::vector<int>> seqs;  // sorted descending
    std::vector<int> sizes;

    // Enumerate multisets of catalog entries with sizes summing to `total`,
    // each of size <= `part_cap`, entries in non-increasing order. The size-1
    // block can always fill any remainder, so every branch completes.
    template <class Fn>
    void for_each_multiset(int total, int part_cap, Fn&& fn) const {
        std::vector<int> picked;
        std::function<void(int, int)> rec = [&](size_t from, int remaining) {
            if (remaining == 0) {
                fn(picked);
                return;
            }
            for (size_t i = from; i < seqs.size(); ++i) {
                if (sizes[i] > std::min(remaining, part_cap)) continue;
                picked.push_back(static_cast<int>(i));
                rec(i, remaining - sizes[i]);
                picked.pop_back();
            }
        };
        rec(0, total);
    }

    static RootedCatalog build(int max_size) {
        RootedCatalog cat;
        cat.seqs.push_back({0});
        cat.sizes.push_back(1);
        for (int s = 2; s <= max_size; ++s) {
            std::vector<std::vector<int>> fresh;
            cat.for_each_multiset(s - 1, s - 1, [&](const std::vector<int>& picked) {
                std::vector<int> seq{0};
                for (int idx : picked)
                    for (int lvl : cat.seqs[idx]) seq.push_back(lvl + 1);
                fresh.push_back(std::move(seq));
            });
            for (auto& q : fresh) {
                cat.seqs.push_back(std::move(q));
                cat.sizes.push_back(s);
            }
            std::vector<size_t> perm(cat.seqs.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            std::sort(perm.begin(), perm.end(),
                      [&](size_t a, size_t b) { return cat.seqs[a] > cat.seqs[b]; });
            std::vector<std::vector<int>> s2(perm.size());
            std::vector<int> z2(perm.size());
            for (size_t i = 0; i < perm.size(); ++i) {
                s2[i] = std::move(cat.seqs[perm[i]]);
                z2[i] = cat.sizes[perm[i]];
            }
            cat.seqs = std::move(s2);
            cat.sizes = std::move(z2);
        }
        return cat;
    }
};

// Preorder level sequence -> edges (parent of position i is the most recent
// position at level[i]-1), with positions offset by `base`.
inline void level_sequence_edges(const std::vector<int>& levels, int base,
                                 std::vector<std::pair<int, int>>& edges) {
    std::vector<int> last(levels.size() + 1, -1);
    for (size_t i = 0; i < levels.size(); ++i) {
        int lvl = levels[i];
        if (lvl > 0) edges.emplace_back(base + last[lvl - 1], base + static_cast<int>(i));
        last[lvl] = static_cast<int>(i);
    }
}

}  // namespace detail

/// Stream every free tree of order n exactly once, in a deterministic order,
/// with no isomorphism tests: a tree is emitted from its canonical rooted
/// form (rooted at the unique centroid, children subtrees in non-increasing
/// lexicographic order of their level sequences), and bicentroidal trees as
/// an ordered pair of rooted halves joined at the roots.
template <class Sink>
void free_trees(int n, Sink&& sink) {
    if (n < 1 || n > kMaxTreeOrder)
        throw std::invalid_argument("free_trees supports 1 <= n <= " +
                                    std::to_string(kMaxTreeOrder));
    if (n == 1) {
        sink(Graph::from_edges(1, {}));
        return;
    }
    if (n == 2) {
        sink(Graph::from_edges(2, {{0, 1}}));
        return;
    }
    auto cat = detail::RootedCatalog::build(n / 2);
    std::vector<std::pair<int, int>> edges;

    // Unique centroid at the root: every child subtree strictly smaller than n/2.
    cat.for_each_multiset(n - 1, (n - 1) / 2, [&](const std::vector<int>& picked) {
        std::vector<int> seq{0};
        for (int idx : picked)
            for (int lvl : cat.seqs[idx]) seq.push_back(lvl + 1);
        edges.clear();
        detail::level_sequence_edges(seq, 0, edges);
        sink(Graph::from_edges(n, edges));
    });

    if (n % 2 == 0) {
        // Two adjacent centroids: unordered pair of rooted halves of size n/2.
        std::vector<int> half;
        for (size_t i = 0; i < cat.seqs.size(); ++i)
            if (cat.sizes[i] == n / 2) half.push_back(static_cast<int>(i));
        for (size_t a = 0; a < half.size(); ++a) {
            for (size_t b = a; b < half.size(); ++b) {
                edges.clear();
                detail::level_sequence_edges(cat.seqs[half[a]], 0, edges);
                detail::level_sequence_edges(cat.seqs[half[b]], n / 2, edges);
                edges.emplace_back(0, n / 2);
                sink(Graph::from_edges(n, edges));
            }
        }
    }
}

inline long long count_free_trees(int n) {
    long long c = 0;
    free_trees(n, [&](const Graph&) { ++c; });
    return c;
}

}  // namespace decnum
