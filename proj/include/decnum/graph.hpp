#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decnum {

inline constexpr int kMaxVertices = 512;

/// Immutable simple undirected graph. Adjacency is stored as one bitset row
/// per vertex (64-bit words), which rules out self-loops and multi-edges by
/// construction and makes neighborhood queries cheap at the orders this
/// library targets (n <= 512, single word for n <= 64).
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = {}) {
        Graph g(n, std::move(name));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) +
                                            ") with n=" + std::to_string(n));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            g.set_edge(u, v);
        }
        g.finish();
        return g;
    }

    int order() const { return n_; }
    long long edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const { return degree_[v]; }

    int min_degree() const { return n_ ? *std::min_element(degree_.begin(), degree_.end()) : 0; }
    int max_degree() const { return n_ ? *std::max_element(degree_.begin(), degree_.end()) : 0; }

    /// Degree if the graph is regular, otherwise empty.
    bool is_regular(int k) const {
        return std::all_of(degree_.begin(), degree_.end(), [k](int d) { return d == k; });
    }

    std::span<const uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    int words() const { return words_; }

    template <class F>
    void for_neighbors(int v, F&& f) const {
        const uint64_t* r = bits_.data() + static_cast<size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            uint64_t x = r[w];
            while (x) {
                f((w << 6) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> neighbor_list(int v) const {
        std::vector<int> out;
        out.reserve(degree_[v]);
        for_neighbors(v, [&](int u) { out.push_back(u); });
        return out;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(edge_count_));
        for (int u = 0; u < n_; ++u)
            for_neighbors(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    const std::string& name() const { return name_; }
    Graph with_name(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

    /// Induced subgraph on `verts` (vertices renumbered in the given order).
    Graph induced(const std::vector<int>& verts) const {
        std::vector<std::pair<int, int>> es;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) es.emplace_back(int(i), int(j));
        return from_edges(static_cast<int>(verts.size()), es);
    }

    /// Relabeled copy: vertex v of the result is vertex perm[v] of *this.
    Graph relabeled(const std::vector<int>& perm) const {
        std::vector<int> inv(n_);
        for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
        std::vector<std::pair<int, int>> es;
        es.reserve(static_cast<size_t>(edge_count_));
        for (auto [u, v] : edge_list()) es.emplace_back(inv[u], inv[v]);
        return from_edges(n_, es);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    explicit Graph(int n, std::string name)
        : n_(n), words_((n + 63) / 64), name_(std::move(name)) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("graph order must be in [1," +
                                        std::to_string(kMaxVertices) +
                                        "], got " + std::to_string(n));
        bits_.assign(static_cast<size_t>(n_) * words_, 0);
    }

    void set_edge(int u, int v) {
        bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    }

    void finish() {
        degree_.assign(n_, 0);
        long long total = 0;
        for (int v = 0; v < n_; ++v) {
            int d = 0;
            for (auto w : row(v)) d += std::popcount(w);
            degree_[v] = d;
            total += d;
        }
        edge_count_ = total / 2;
    }

    int n_;
    int words_;
    long long edge_count_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<int> degree_;
    std::string name_;
};

}  // namespace decnum
