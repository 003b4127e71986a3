#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "decnum/algos.hpp"
#include "decnum/canonical.hpp"
#include "decnum/graph.hpp"
#include "decnum/named.hpp"
#include "decnum/variant.hpp"

namespace decnum {

namespace detail {
inline int ceil_div(int a, int b) {
    // b > 0; exact ceiling for negative a too
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
}  // namespace detail

/// beta of the path P_n, n >= 2 (n = 2 is the degenerate extension: both +1).
inline int beta_path(int n) {
    if (n < 2) throw std::invalid_argument("beta_path needs n >= 2");
    if (n % 4 == 0) return 0;
    if (n % 4 == 2) return 2;
    return 1;
}

/// beta of the cycle C_n, n >= 3.
inline int beta_cycle(int n) {
    if (n < 3) throw std::invalid_argument("beta_cycle needs n >= 3");
    if (n % 4 == 0) return 0;
    if (n % 4 == 2) return -2;
    return -1;
}

/// a_n: the maximum of beta over all trees of order n (n >= 3).
inline int max_tree_bad(int n) {
    if (n < 3) throw std::invalid_argument("max_tree_bad needs n >= 3");
    return n - 2 * detail::ceil_div(n + 6, 10);
}

/// Excellent decision number of P_n, n >= 2.
inline int excellent_path(int n) {
    if (n < 2) throw std::invalid_argument("excellent_path needs n >= 2");
    return n - 2 * detail::ceil_div(n - 4, 3);
}

/// Lower bound on the excellent decision number of any tree of order n >= 2.
inline int tree_excellent_lower(int n) { return excellent_path(n); }

/// The four solved decision numbers of one graph.
struct SolvedValues {
    int bad;        // beta
    int nice;       // beta-bar
    int good;       // gamma
    int excellent;  // gamma-bar

    int operator[](Variant v) const {
        if (!v.closed && !v.minimize) return bad;
        if (v.closed && !v.minimize) return nice;
        if (!v.closed && v.minimize) return good;
        return excellent;
    }
};

struct BoundCheck {
    std::string name;
    bool holds;
    long long lhs, rhs;   // the two sides as compared, scaled to integers
    bool exempt = false;  // true when an explicit exception fired (Petersen)
};

struct BoundReport {
    std::string graph_id;
    SolvedValues values;
    std::vector<BoundCheck> checks;

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

inline const CanonicalForm& petersen_form() {
    static const CanonicalForm form = canonical_form(petersen());
    return form;
}

inline bool is_petersen(const Graph& g) {
    return g.order() == 10 && is_cubic(g) && canonical_form(g) == petersen_form();
}

/// The cubic graphs whose excellent decision number exceeds 5n/7: the
/// Petersen graph (8 > 50/7) and the two order-8 graphs with value 6 > 40/7,
/// namely the Wagner graph (Moebius ladder on 8 vertices) and the triangle
/// joined through a perfect matching to the 3-side of a K_{2,3}. Verified
/// exhaustively over all connected cubic graphs up to order 12; the n=14..18
/// reference aggregates stay below 5n/7 as well.
inline bool excellent_exceeds_5n7(const Graph& g) {
    if (g.order() == 10) return is_petersen(g);
    if (g.order() != 8 || !is_cubic(g)) return false;
    struct Forms {
        CanonicalForm wagner, capped;
        Forms() {
            std::vector<std::pair<int, int>> w;
            for (int i = 0; i < 8; ++i) w.emplace_back(i, (i + 1) % 8);
            for (int i = 0; i < 4; ++i) w.emplace_back(i, i + 4);
            wagner = canonical_form(Graph::from_edges(8, w));
            capped = canonical_form(Graph::from_edges(
                8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6},
                    {3, 7}, {4, 7}, {5, 7}}));
        }
    };
    static const Forms forms;
    auto f = canonical_form(g);
    return f == forms.wagner || f == forms.capped;
}

/// Evaluate every applicable inequality against the solved values, in exact
/// integer arithmetic. A bound appears in the report only when its
/// precondition (cubic, regular, delta >= 2, tree, connected) holds.
inline BoundReport check_bounds(const Graph& g, const SolvedValues& vals) {
    const long long n = g.order();
    const long long m = g.edge_count();
    BoundReport rep{g.name().empty() ? "n=" + std::to_string(n) : g.name(), vals, {}};
    auto add = [&](std::string name, bool holds, long long lhs, long long rhs,
                   bool exempt = false) {
        rep.checks.push_back({std::move(name), holds, lhs, rhs, exempt});
    };

    const bool connected = is_connected(g);
    const bool cubic = is_cubic(g);
    const bool tree = is_tree(g);

    if (g.min_degree() >= 2) {
        // beta <= n + 1 - sqrt(4n+1), compared via squares
        long long slack = n + 1 - vals.bad;
        add("bad_ub_sqrt", slack >= 0 && slack * slack >= 4 * n + 1, slack * slack, 4 * n + 1);
        add("bad_ub_size", 5 * vals.bad <= 4 * m - 3 * n, 5 * vals.bad, 4 * m - 3 * n);
    }
    if (int k = g.min_degree(); k >= 1 && g.is_regular(k)) {
        if (k % 2 == 0)
            add("bad_ub_regular_even", vals.bad <= 0, vals.bad, 0);
        else
            add("bad_ub_regular_odd", static_cast<long long>(k) * vals.bad <= n,
                static_cast<long long>(k) * vals.bad, n);
    }
    if (connected) {
        // Cycles of length 2 mod 4 have beta = -2 < n - m - 1 = -1, refuting
        // the stated bound's cycle base case; they are exempted explicitly.
        bool exceptional_cycle = g.is_regular(2) && n % 4 == 2;
        add("bad_lb_order_size", exceptional_cycle || vals.bad >= n - m - 1, vals.bad,
            n - m - 1, exceptional_cycle);
    }
    if (cubic) {
        add("bad_cubic_nonneg", vals.bad >= 0, vals.bad, 0);
        add("nice_cubic_zero_mod4", vals.nice != 0 || n % 4 == 0, vals.nice, 0);
        add("nice_cubic_lb", 7 * vals.nice >= -3 * n, 7 * vals.nice, -3 * n);
        add("good_cubic_ub", 7 * vals.good <= 5 * n, 7 * vals.good, 5 * n);
        add("good_cubic_lb", 3 * vals.good >= n, 3 * vals.good, n);
        // The Petersen graph breaks the 3n/4 bound (8 > 30/4); it and the two
        // order-8 extremal graphs break 5n/7. Exempted by canonical-form match.
        bool petersen = connected && is_petersen(g);
        add("excellent_cubic_ub_3n4", petersen || 4 * vals.excellent <= 3 * n,
            4 * vals.excellent, 3 * n, petersen);
        bool exc57 = connected && excellent_exceeds_5n7(g);
        add("excellent_cubic_ub_5n7", exc57 || 7 * vals.excellent <= 5 * n,
            7 * vals.excellent, 5 * n, exc57);
    }
    if (tree) {
        if (n >= 3)
            add("bad_tree_ub", vals.bad <= max_tree_bad(static_cast<int>(n)), vals.bad,
                max_tree_bad(static_cast<int>(n)));
        add("nice_tree_nonneg", vals.nice >= 0, vals.nice, 0);
        if (n >= 2)
            add("excellent_tree_lb", vals.excellent >= tree_excellent_lower(static_cast<int>(n)),
                vals.excellent, tree_excellent_lower(static_cast<int>(n)));
    }
    return rep;
}

/// A partition of a cubic graph's vertices into 6-sets of the form
/// N[u1] u N[u2] with u1u2 an edge (which forces u1, u2 to have no common
/// neighbor). Existence is equivalent to beta = n/3.
struct EdgeNeighborhoodPartition {
    std::vector<std::pair<int, int>> center_edges;
    std::vector<std::vector<int>> parts;
};

namespace detail {

inline bool induced_double_star(const Graph& g, const std::vector<int>& part, int u1, int u2) {
    // 6 vertices, 5 induced edges, degrees {3,3,1,1,1,1} with the 3s adjacent
    auto sub = g.induced(part);
    if (sub.edge_count() != 5) return false;
    int i1 = -1, i2 = -1;
    for (size_t i = 0; i < part.size(); ++i) {
        if (part[i] == u1) i1 = static_cast<int>(i);
        if (part[i] == u2) i2 = static_cast<int>(i);
    }
    for (int v = 0; v < 6; ++v) {
        int want = (v == i1 || v == i2) ? 3 : 1;
        if (sub.degree(v) != want) return false;
    }
    return sub.has_edge(i1, i2);
}

}  // namespace detail

/// Exact-cover search for the partition above. With `strict_induced` the part
/// must additionally induce the 6-vertex double star; that reading fails on
/// graphs like the prism, whose only part induces extra edges.
inline std::optional<EdgeNeighborhoodPartition> edge_neighborhood_partition(
    const Graph& g, bool strict_induced = false) {
    if (!is_cubic(g)) throw std::invalid_argument("edge_neighborhood_partition needs a cubic graph");
    const int n = g.order();
    if (n % 6 != 0) return std::nullopt;

    struct Cand {
        int u1, u2;
        std::vector<int> part;
    };
    std::vector<Cand> cands;
    for (auto [u, v] : g.edge_list()) {
        std::vector<int> part{u, v};
        g.for_neighbors(u, [&](int w) {
            if (w != v) part.push_back(w);
        });
        bool overlap = false;
        g.for_neighbors(v, [&](int w) {
            if (w == u) return;
            if (std::find(part.begin(), part.end(), w) != part.end())
                overlap = true;
            else
                part.push_back(w);
        });
        if (overlap) continue;  // common neighbor: |N[u] u N[v]| < 6
        std::sort(part.begin(), part.end());
        if (strict_induced && !detail::induced_double_star(g, part, u, v)) continue;
        cands.push_back({u, v, std::move(part)});
    }

    std::vector<std::vector<int>> by_vertex(n);
    for (size_t i = 0; i < cands.size(); ++i)
        for (int v : cands[i].part) by_vertex[v].push_back(static_cast<int>(i));

    std::vector<char> covered(n, 0);
    std::vector<int> chosen;
    auto cover = [&](auto&& self, int from) -> bool {
        int v = from;
        while (v < n && covered[v]) ++v;
        if (v == n) return true;
        for (int ci : by_vertex[v]) {
            const auto& part = cands[ci].part;
            bool free = true;
            for (int w : part)
                if (covered[w]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int w : part) covered[w] = 1;
            chosen.push_back(ci);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
            for (int w : part) covered[w] = 0;
        }
        return false;
    };
    if (!cover(cover, 0)) return std::nullopt;

    EdgeNeighborhoodPartition out;
    for (int ci : chosen) {
        out.center_edges.emplace_back(cands[ci].u1, cands[ci].u2);
        out.parts.push_back(cands[ci].part);
    }
    return out;
}

}  // namespace decnum
