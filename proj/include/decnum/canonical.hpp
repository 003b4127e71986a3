#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

/// Isomorphism-invariant certificate: two graphs have equal forms iff they
/// are isomorphic. Rendered as the order followed by the packed upper
/// triangle of the adjacency matrix under the canonical labeling.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes < b.bytes;
    }
};

namespace detail {

// Backtracking canonical labeling: equitable refinement, individualization of
// the first non-singleton cell, and orbit pruning from automorphisms found at
// leaves that replicate the first leaf's certificate.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::string run() {
        Partition start{std::vector<int>(n_)};
        std::iota(start[0].begin(), start[0].end(), 0);
        refine(start);
        explore(start, {});
        return best_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    void refine(Partition& cells) const {
        std::vector<int> cnt(n_);
        bool again = true;
        while (again) {
            again = false;
            for (size_t si = 0; si < cells.size() && !again; ++si) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (int v : cells[si]) g_.for_neighbors(v, [&](int u) { ++cnt[u]; });
                for (size_t ci = 0; ci < cells.size(); ++ci) {
                    auto& cell = cells[ci];
                    if (cell.size() < 2) continue;
                    int c0 = cnt[cell[0]];
                    if (std::all_of(cell.begin(), cell.end(),
                                    [&](int v) { return cnt[v] == c0; }))
                        continue;
                    std::stable_sort(cell.begin(), cell.end(),
                                     [&](int a, int b) { return cnt[a] < cnt[b]; });
                    Partition pieces;
                    for (int v : cell) {
                        if (pieces.empty() || cnt[pieces.back()[0]] != cnt[v])
                            pieces.emplace_back();
                        pieces.back().push_back(v);
                    }
                    cells.erase(cells.begin() + ci);
                    cells.insert(cells.begin() + ci, pieces.begin(), pieces.end());
                    again = true;
                    break;
                }
            }
        }
    }

    void explore(const Partition& cells, std::vector<int> fixed) {
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (in_known_orbit(v, tried, fixed)) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            refine(child);
            auto fixed2 = fixed;
            fixed2.push_back(v);
            explore(child, std::move(fixed2));
        }
    }

    void leaf(const Partition& cells) {
        std::vector<int> lab;
        lab.reserve(n_);
        for (auto& c : cells) lab.push_back(c[0]);
        std::string cert = certificate(lab);
        if (best_.empty() || cert < best_) best_ = cert;
        if (first_lab_.empty()) {
            first_lab_ = lab;
            first_cert_ = cert;
        } else if (cert == first_cert_ && autos_.size() < 64) {
            std::vector<int> perm(n_);
            for (int i = 0; i < n_; ++i) perm[first_lab_[i]] = lab[i];
            if (is_automorphism(perm)) autos_.push_back(std::move(perm));
        }
    }

    bool is_automorphism(const std::vector<int>& p) const {
        for (auto [u, v] : g_.edge_list())
            if (!g_.has_edge(p[u], p[v])) return false;
        return true;
    }

    // Union-find over autos that fix every already-individualized vertex;
    // v is skipped when it shares an orbit with a sibling tried earlier.
    bool in_known_orbit(int v, const std::vector<int>& tried,
                        const std::vector<int>& fixed) {
        if (tried.empty() || autos_.empty()) return false;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : autos_) {
            bool fixes = true;
            for (int f : fixed)
                if (a[f] != f) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int ra = find(x), rb = find(a[x]);
                if (ra != rb) parent[ra] = rb;
            }
        }
        int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    std::string certificate(const std::vector<int>& lab) const {
        std::string out;
        out.reserve(2 + static_cast<size_t>(n_) * (n_ - 1) / 16 + 1);
        out.push_back(static_cast<char>(n_ >> 8));
        out.push_back(static_cast<char>(n_ & 255));
        int acc = 0, nb = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = (acc << 1) | (g_.has_edge(lab[i], lab[j]) ? 1 : 0);
                if (++nb == 8) {
                    out.push_back(static_cast<char>(acc));
                    acc = nb = 0;
                }
            }
        if (nb) out.push_back(static_cast<char>(acc << (8 - nb)));
        return out;
    }

    const Graph& g_;
    int n_;
    std::string best_;
    std::vector<int> first_lab_;
    std::string first_cert_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{detail::CanonicalSearch(g).run()};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace decnum
