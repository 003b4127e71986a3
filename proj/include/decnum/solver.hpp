#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "decnum/algos.hpp"
#include "decnum/graph.hpp"
#include "decnum/variant.hpp"

namespace decnum {

struct SolveOutcome {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    int value = 0;
    Assignment witness;
    uint64_t nodes_explored = 0;

    bool optimal() const { return status == Status::Optimal; }
};

inline constexpr int kBruteforceMaxOrder = 26;

/// Exhaust all 2^n assignments. Refuses orders above kBruteforceMaxOrder;
/// use solve() there. The witness is the first optimum in mask order (bit i
/// set = vertex i gets +1), so runs are reproducible.
inline SolveOutcome solve_bruteforce(const Graph& g, Variant variant) {
    const int n = g.order();
    if (n > kBruteforceMaxOrder)
        throw std::invalid_argument("solve_bruteforce: order " + std::to_string(n) + " exceeds " +
                                    std::to_string(kBruteforceMaxOrder) + "; use solve()");
    std::vector<uint32_t> cmask(n);
    std::vector<int> csize(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = variant.closed ? (uint32_t{1} << v) : 0;
        g.for_neighbors(v, [&](int u) { m |= uint32_t{1} << u; });
        cmask[v] = m;
        csize[v] = std::popcount(m);
    }
    SolveOutcome out;
    out.nodes_explored = uint64_t{1} << n;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            int s = 2 * std::popcount(mask & cmask[v]) - csize[v];
            ok = variant.constraint_ok(s);
        }
        if (!ok) continue;
        int total = 2 * std::popcount(mask) - n;
        bool better = !out.optimal() ||
                      (variant.minimize ? total < out.value : total > out.value);
        if (better) {
            out.status = SolveOutcome::Status::Optimal;
            out.value = total;
            out.witness.assign(n, -1);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) out.witness[v] = 1;
        }
    }
    return out;
}

namespace detail {

// Branch and bound over a fixed vertex order (degree descending, index
// ascending). A partial assignment is abandoned when (a) some vertex's
// constraint can no longer be met even if all its undecided constraint-set
// members take the helpful sign, or (b) setting every undecided vertex to the
// objective-favorable sign still cannot beat the incumbent. Rule (a) is
// applied with one step of lookahead: when a constraint admits only one value
// for its undecided members, those values are propagated instead of branched
// on. A branch skipped this way would die at (a) on its next assignment, so
// the visited leaves, and hence the value and the first-found witness, match
// the unpropagated search exactly.
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, Variant variant) : var_(variant), n_(g.order()) {
        cset_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            cset_[v] = g.neighbor_list(v);
            if (var_.closed) cset_[v].push_back(v);
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        sum_.assign(n_, 0);
        cnt_.resize(n_);
        for (int v = 0; v < n_; ++v) cnt_[v] = static_cast<int>(cset_[v].size());
        val_.assign(n_, 0);
        trail_.reserve(n_);
    }

    SolveOutcome run() {
        SolveOutcome out;
        for (int v = 0; v < n_; ++v)
            if (!satisfiable(v)) return out;  // e.g. the good variant on an isolated vertex
        bool root_ok = propagate_initial();
        if (root_ok) descend(0);
        out.nodes_explored = nodes_;
        if (found_) {
            out.status = SolveOutcome::Status::Optimal;
            out.value = best_;
            out.witness = best_val_;
        }
        return out;
    }

private:
    bool satisfiable(int v) const {
        return var_.minimize ? sum_[v] + cnt_[v] >= 1 : sum_[v] - cnt_[v] <= 1;
    }

    // The one value an undecided member of w's constraint may still take, or
    // 0 when both values stay open (or nothing is undecided).
    int forced_value(int w) const {
        if (cnt_[w] == 0) return 0;
        if (!var_.minimize && sum_[w] - cnt_[w] >= 0) return -1;
        if (var_.minimize && sum_[w] + cnt_[w] <= 2) return 1;
        return 0;
    }

    bool assign_raw(int u, int x) {
        ++nodes_;
        val_[u] = static_cast<int8_t>(x);
        total_ += x;
        --undecided_;
        trail_.push_back(u);
        for (int w : cset_[u]) {
            sum_[w] += x;
            --cnt_[w];
        }
        for (int w : cset_[u])
            if (!satisfiable(w)) return false;
        return true;
    }

    // Assign and run forced moves to a fixpoint; false on a dead end.
    bool assign_propagating(int u, int x) {
        size_t head = trail_.size();
        if (!assign_raw(u, x)) return false;
        while (head < trail_.size()) {
            int a = trail_[head++];
            for (int w : cset_[a]) {
                int fx = forced_value(w);
                if (fx == 0) continue;
                for (int z : cset_[w])
                    if (val_[z] == 0 && !assign_raw(z, fx)) return false;
            }
        }
        return true;
    }

    bool propagate_initial() {
        for (int w = 0; w < n_; ++w) {
            int fx = forced_value(w);
            if (fx == 0) continue;
            for (int z : cset_[w])
                if (val_[z] == 0 && !assign_propagating(z, fx)) return false;
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int u = trail_.back();
            trail_.pop_back();
            int x = val_[u];
            val_[u] = 0;
            total_ -= x;
            ++undecided_;
            for (int w : cset_[u]) {
                sum_[w] -= x;
                ++cnt_[w];
            }
        }
    }

    bool can_beat_incumbent() const {
        if (!found_) return true;
        return var_.minimize ? total_ - undecided_ < best_ : total_ + undecided_ > best_;
    }

    void record_leaf() {
        // cnt_ is all zero here, so the satisfiability checks were exact.
        if (!found_ || (var_.minimize ? total_ < best_ : total_ > best_)) {
            found_ = true;
            best_ = total_;
            best_val_ = val_;
        }
    }

    void descend(int pos) {
        while (pos < n_ && val_[order_[pos]] != 0) ++pos;
        if (pos == n_) {
            record_leaf();
            return;
        }
        int u = order_[pos];
        const int first = var_.minimize ? -1 : 1;
        for (int x : {first, -first}) {
            size_t mark = trail_.size();
            if (assign_propagating(u, x) && can_beat_incumbent()) {
                if (undecided_ == 0)
                    record_leaf();
                else
                    descend(pos + 1);
            }
            undo_to(mark);
        }
    }

    Variant var_;
    int n_;
    std::vector<std::vector<int>> cset_;
    std::vector<int> order_;
    std::vector<int> sum_, cnt_;
    Assignment val_;
    std::vector<int> trail_;
    int total_ = 0;
    int undecided_{n_};
    bool found_ = false;
    int best_ = 0;
    Assignment best_val_;
    uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact optimum for any order the Graph type admits. Components are solved
/// independently (the constraints never cross components) and the optima
/// summed; any infeasible component makes the whole instance infeasible.
inline SolveOutcome solve(const Graph& g, Variant variant) {
    auto comps = components(g);
    if (comps.size() == 1) return detail::BranchAndBound(g, variant).run();

    SolveOutcome out;
    out.status = SolveOutcome::Status::Optimal;
    out.witness.assign(g.order(), 0);
    for (const auto& comp : comps) {
        auto sub = g.induced(comp);
        auto part = detail::BranchAndBound(sub, variant).run();
        out.nodes_explored += part.nodes_explored;
        if (!part.optimal()) {
            out.status = SolveOutcome::Status::Infeasible;
            out.value = 0;
            out.witness.clear();
            return out;
        }
        out.value += part.value;
        for (size_t i = 0; i < comp.size(); ++i) out.witness[comp[i]] = part.witness[i];
    }
    return out;
}

}  // namespace decnum
