#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "decnum/algos.hpp"
#include "decnum/coloring.hpp"
#include "decnum/graph.hpp"
#include "decnum/named.hpp"
#include "decnum/solver.hpp"
#include "decnum/transforms.hpp"
#include "decnum/variant.hpp"

namespace decnum {

/// A construction's promise: the assignment is valid for the variant and its
/// total meets `claimed_bound` (>= for maximizing variants, <= for
/// minimizing ones).
struct CertifiedAssignment {
    Graph graph;
    Variant variant;
    Assignment assignment;
    int claimed_bound;

    Evaluation check() const { return evaluate(graph, variant, assignment); }

    bool certify() const {
        auto ev = check();
        if (!ev.valid) return false;
        return variant.minimize ? ev.total <= claimed_bound : ev.total >= claimed_bound;
    }
};

/// Blow a tree skeleton of order k up to the extremal bad tree of order
/// 10k-6: every skeleton vertex v gets d(v)+1 fresh middle vertices, and
/// every middle gets two fresh leaves. The bad function putting -1 exactly on
/// the skeleton is valid with total 8k-6.
inline CertifiedAssignment extremal_bad_tree(const Graph& skeleton) {
    if (!is_tree(skeleton)) throw std::invalid_argument("extremal_bad_tree needs a tree skeleton");
    const int k = skeleton.order();
    std::vector<std::pair<int, int>> edges = skeleton.edge_list();
    int next = k;
    for (int v = 0; v < k; ++v) {
        for (int i = 0; i <= skeleton.degree(v); ++i) {
            int mid = next++;
            edges.emplace_back(v, mid);
            edges.emplace_back(mid, next++);
            edges.emplace_back(mid, next++);
        }
    }
    Graph g = Graph::from_edges(next, edges);
    Assignment f(next, 1);
    for (int v = 0; v < k; ++v) f[v] = -1;
    return {std::move(g), Variant::bad(), std::move(f), 8 * k - 6};
}

/// Nice function with nonnegative total on any tree, built by the two-case
/// recursion: strip a pendant pair with a shared neighbor u (u gets -1, one
/// pendant +1, the other inherits u's old value), else strip the closed
/// neighborhood of a longest path's pendant end (+1 on the end, -1 on its
/// neighbor). Bases: a lone vertex gets +1, an edge gets (+1,-1) -- the
/// all-ones labeling is not nice on an edge.
inline CertifiedAssignment nice_tree_function(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("nice_tree_function needs a tree");
    const int n = t.order();
    Assignment f(n, 0);
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);

    auto alive_degree = [&](int v) {
        int d = 0;
        t.for_neighbors(v, [&](int u) { d += alive[u]; });
        return d;
    };

    std::function<void(int)> build = [&](int count) {
        if (count == 0) return;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (alive[v]) verts.push_back(v);
        if (count == 1) {
            f[verts[0]] = 1;
            return;
        }
        if (count == 2) {
            f[verts[0]] = 1;
            f[verts[1]] = -1;
            return;
        }
        for (int v : verts) deg[v] = alive_degree(v);

        // Case 1: a vertex with two pendant neighbors.
        for (int u : verts) {
            std::vector<int> pendants;
            t.for_neighbors(u, [&](int w) {
                if (alive[w] && deg[w] == 1) pendants.push_back(w);
            });
            if (pendants.size() < 2) continue;
            int v1 = pendants[0], v2 = pendants[1];
            alive[v1] = alive[v2] = 0;
            build(count - 2);
            f[v2] = f[u];
            f[u] = -1;
            f[v1] = 1;
            return;
        }

        // Case 2: pendant end u of a longest path; here its neighbor has
        // alive degree 2, so removing N[u] leaves a tree.
        auto far_from = [&](int s) {
            std::vector<int> dist(n, -1), queue{s};
            dist[s] = 0;
            int best = s;
            for (size_t h = 0; h < queue.size(); ++h) {
                int v = queue[h];
                t.for_neighbors(v, [&](int w) {
                    if (alive[w] && dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                        if (dist[w] > dist[best] || (dist[w] == dist[best] && w < best)) best = w;
                    }
                });
            }
            return best;
        };
        int a = far_from(verts[0]);
        int u = far_from(a);
        int p = -1;
        t.for_neighbors(u, [&](int w) {
            if (alive[w]) p = w;
        });
        alive[u] = alive[p] = 0;
        build(count - 2);
        f[u] = 1;
        f[p] = -1;
    };
    build(n);
    return {t, Variant::nice(), std::move(f), 0};
}

/// Good function on a connected cubic bipartite graph with total <= 5n/7.
/// Step 1 repeatedly takes the lexicographically first unvalued adjacent
/// pair, gives both -1, and gives +1 to every unvalued vertex within
/// distance 2 of either. Step 2 sweeps the remaining unvalued vertices: -1 on
/// the vertex, +1 on unvalued vertices at distance exactly 2. No two -1
/// vertices ever share a neighbor, which is what makes the output valid.
inline CertifiedAssignment greedy_good_cubic_bipartite(const Graph& g) {
    if (!is_cubic(g) || !is_connected(g) || !is_bipartite(g))
        throw std::invalid_argument(
            "greedy_good_cubic_bipartite needs a connected cubic bipartite graph");
    const int n = g.order();
    Assignment f(n, 0);

    for (;;) {
        int pu = -1, pv = -1;
        for (int u = 0; u < n && pu < 0; ++u) {
            if (f[u]) continue;
            int best = -1;
            g.for_neighbors(u, [&](int v) {
                if (!f[v] && v > u && (best < 0 || v < best)) best = v;
            });
            if (best >= 0) {
                pu = u;
                pv = best;
            }
        }
        if (pu < 0) break;
        f[pu] = f[pv] = -1;
        auto du = distances_from(g, pu), dv = distances_from(g, pv);
        for (int w = 0; w < n; ++w)
            if (!f[w] && (du[w] <= 2 || dv[w] <= 2)) f[w] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (f[v]) continue;
        f[v] = -1;
        auto dv = distances_from(g, v);
        for (int w = 0; w < n; ++w)
            if (!f[w] && dv[w] == 2) f[w] = 1;
    }
    return {g, Variant::good(), std::move(f), 5 * n / 7};
}

/// Good function on any cubic graph via its bipartite double cover: find a
/// good function on the cover (greedy when the cover is connected, i.e. g is
/// non-bipartite; exact solve when g is bipartite and the cover splits into
/// two copies), then project the copy with the smaller sum back down.
inline CertifiedAssignment double_cover_good(const Graph& g) {
    if (!is_cubic(g)) throw std::invalid_argument("double_cover_good needs a cubic graph");
    Graph h = bipartite_double_cover(g);
    Assignment fh;
    if (is_connected(h)) {
        fh = greedy_good_cubic_bipartite(h).assignment;
    } else {
        auto out = solve(h, Variant::good());
        fh = std::move(out.witness);
    }
    const int n = g.order();
    int sum_primed = 0, sum_doubled = 0;
    for (int i = 0; i < n; ++i) {
        sum_primed += fh[2 * i];
        sum_doubled += fh[2 * i + 1];
    }
    int shift = sum_doubled < sum_primed ? 1 : 0;
    Assignment proj(n);
    for (int i = 0; i < n; ++i) proj[i] = fh[2 * i + shift];
    return {g, Variant::good(), std::move(proj), (sum_primed + sum_doubled) / 2};
}

/// -1 exactly on a largest class of a 2-distance coloring. Valid whenever
/// delta(g) >= 2, no matter how many colors the heuristic used; the total is
/// n - 2 * |largest class|.
inline CertifiedAssignment excellent_from_coloring(const Graph& g,
                                                   const std::vector<int>& coloring) {
    if (g.min_degree() < 2)
        throw std::invalid_argument("excellent_from_coloring needs minimum degree >= 2");
    if (static_cast<int>(coloring.size()) != g.order())
        throw std::invalid_argument("coloring size does not match graph order");
    int classes = color_class_count(coloring);
    std::vector<int> size(classes, 0);
    for (int c : coloring) ++size[c];
    int pick = 0;
    for (int c = 1; c < classes; ++c)
        if (size[c] > size[pick]) pick = c;
    Assignment f(g.order());
    for (int v = 0; v < g.order(); ++v) f[v] = coloring[v] == pick ? -1 : 1;
    return {g, Variant::excellent(), std::move(f), g.order() - 2 * size[pick]};
}

inline CertifiedAssignment excellent_by_coloring(const Graph& g) {
    return excellent_from_coloring(g, two_distance_coloring(g));
}

/// Chain of 2t copies of K_{2,3}: copy i carries top vertices a_i, b_i and
/// bottom vertices c_i, d_i, e_i (laid out as 5i..5i+4); the d's are joined
/// in consecutive pairs and c_i to e_{i+1} cyclically. Cubic and bipartite of
/// order 10t, with nice decision number -2t.
inline Graph k23_chain(int t) {
    if (t < 1) throw std::invalid_argument("k23_chain needs t >= 1");
    const int copies = 2 * t;
    std::vector<std::pair<int, int>> edges;
    auto a = [](int i) { return 5 * i; };
    auto b = [](int i) { return 5 * i + 1; };
    auto c = [](int i) { return 5 * i + 2; };
    auto d = [](int i) { return 5 * i + 3; };
    auto e = [](int i) { return 5 * i + 4; };
    for (int i = 0; i < copies; ++i) {
        for (int top : {a(i), b(i)})
            for (int bot : {c(i), d(i), e(i)}) edges.emplace_back(top, bot);
        edges.emplace_back(c(i), e((i + 1) % copies));
    }
    for (int j = 0; j < t; ++j) edges.emplace_back(d(2 * j), d(2 * j + 1));
    return Graph::from_edges(10 * t, edges, "K23chain" + std::to_string(t));
}

/// Level 1 is the Heawood graph; level i doubles level i-1 through the
/// bipartite double cover (which, the base being bipartite, yields 2^{i-1}
/// disjoint Heawood copies of total order 14 * 2^{i-1}).
inline Graph heawood_tower(int level) {
    if (level < 1) throw std::invalid_argument("heawood_tower needs level >= 1");
    Graph g = heawood();
    for (int i = 2; i <= level; ++i) g = bipartite_double_cover(g);
    return g.with_name("HeawoodTower" + std::to_string(level));
}

/// Good function on the tower with total exactly 5n/7: the greedy function on
/// the Heawood graph, copied to both halves at every doubling.
inline CertifiedAssignment heawood_tower_good(int level) {
    Graph g = heawood_tower(level);
    Assignment f = greedy_good_cubic_bipartite(heawood()).assignment;
    for (int i = 2; i <= level; ++i) {
        Assignment next(2 * f.size());
        for (size_t j = 0; j < f.size(); ++j) next[2 * j] = next[2 * j + 1] = f[j];
        f = std::move(next);
    }
    return {std::move(g), Variant::good(), std::move(f), 5 * (14 << (level - 1)) / 7};
}

/// Total dominating set: exact branch and bound for n <= 26 (branch over the
/// neighbors of the first undominated vertex), greedy plus redundancy
/// removal beyond that.
inline std::vector<int> total_dominating_set(const Graph& g) {
    const int n = g.order();
    if (g.min_degree() < 1)
        throw std::invalid_argument("total dominating set needs minimum degree >= 1");

    auto dominated_by = [&](const std::vector<char>& in_set) {
        std::vector<char> dom(n, 0);
        for (int v = 0; v < n; ++v)
            if (in_set[v]) g.for_neighbors(v, [&](int u) { dom[u] = 1; });
        return dom;
    };

    // Greedy cover by most newly dominated, then drop redundant members.
    std::vector<char> in_set(n, 0);
    {
        std::vector<char> dom(n, 0);
        auto undominated = [&] {
            for (int v = 0; v < n; ++v)
                if (!dom[v]) return v;
            return -1;
        };
        while (undominated() >= 0) {
            int pick = -1, gain = -1;
            for (int u = 0; u < n; ++u) {
                if (in_set[u]) continue;
                int gn = 0;
                g.for_neighbors(u, [&](int w) { gn += !dom[w]; });
                if (gn > gain) {
                    gain = gn;
                    pick = u;
                }
            }
            in_set[pick] = 1;
            g.for_neighbors(pick, [&](int w) { dom[w] = 1; });
        }
        for (int u = 0; u < n; ++u) {
            if (!in_set[u]) continue;
            in_set[u] = 0;
            auto dom2 = dominated_by(in_set);
            bool ok = std::all_of(dom2.begin(), dom2.end(), [](char c) { return c; });
            if (!ok) in_set[u] = 1;
        }
    }
    std::vector<int> best;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) best.push_back(v);
    if (n > kBruteforceMaxOrder) return best;

    std::vector<char> cur(n, 0), dom(n, 0);
    std::vector<int> chosen;
    std::function<void()> search = [&] {
        int v = -1;
        for (int w = 0; w < n; ++w)
            if (!dom[w]) {
                v = w;
                break;
            }
        if (v < 0) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        int undom = 0;
        for (int w = 0; w < n; ++w) undom += !dom[w];
        // each added vertex dominates at most max_degree new vertices
        int lb = (undom + g.max_degree() - 1) / g.max_degree();
        if (chosen.size() + lb >= best.size()) return;
        std::vector<int> cands = g.neighbor_list(v);
        for (int u : cands) {
            cur[u] = 1;
            chosen.push_back(u);
            std::vector<int> newly;
            g.for_neighbors(u, [&](int w) {
                if (!dom[w]) {
                    dom[w] = 1;
                    newly.push_back(w);
                }
            });
            search();
            for (int w : newly) dom[w] = 0;
            chosen.pop_back();
            cur[u] = 0;
        }
    };
    search();
    std::sort(best.begin(), best.end());
    return best;
}

/// Bad function on a cubic graph from a total dominating set S: -1 on S, +1
/// elsewhere. Every open neighborhood then sums to at most 3 - 2 = 1, and
/// |S| <= n/2 makes the total nonnegative.
inline CertifiedAssignment bad_from_total_dominating_set(const Graph& g) {
    if (!is_cubic(g)) throw std::invalid_argument("bad_from_total_dominating_set needs a cubic graph");
    auto tds = total_dominating_set(g);
    Assignment f(g.order(), 1);
    for (int v : tds) f[v] = -1;
    return {g, Variant::bad(), std::move(f), 0};
}

}  // namespace decnum
