#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "decnum/graph.hpp"

namespace decnum {

/// One of the four +-1 decision-number problems. The constraint sense and the
/// objective are tied together: "at most 1" constraints come with a maximizing
/// objective (bad/nice), "at least 1" with a minimizing one (good/excellent).
/// `closed` selects N[v] instead of N(v) in every constraint.
struct Variant {
    bool closed = false;
    bool minimize = false;

    static constexpr Variant bad() { return {false, false}; }
    static constexpr Variant nice() { return {true, false}; }
    static constexpr Variant good() { return {false, true}; }
    static constexpr Variant excellent() { return {true, true}; }

    constexpr bool maximize() const { return !minimize; }

    /// Constraint at v holds iff sum over the constraint set compares to 1
    /// in this direction.
    constexpr bool constraint_ok(int neighborhood_sum) const {
        return minimize ? neighborhood_sum >= 1 : neighborhood_sum <= 1;
    }

    std::string_view name() const {
        if (!closed && !minimize) return "bad";
        if (closed && !minimize) return "nice";
        if (!closed && minimize) return "good";
        return "excellent";
    }

    static std::optional<Variant> parse(std::string_view s);

    friend bool operator==(const Variant&, const Variant&) = default;
};

inline constexpr Variant kVariants[4] = {Variant::bad(), Variant::nice(), Variant::good(),
                                         Variant::excellent()};

inline std::optional<Variant> Variant::parse(std::string_view s) {
    for (Variant v : kVariants)
        if (v.name() == s) return v;
    return std::nullopt;
}

/// Per-vertex +1/-1 values.
using Assignment = std::vector<int8_t>;

inline std::string assignment_to_string(const Assignment& f) {
    std::string s;
    s.reserve(f.size());
    for (int8_t x : f) s.push_back(x > 0 ? '+' : '-');
    return s;
}

inline Assignment assignment_from_string(std::string_view s) {
    Assignment f;
    f.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            f.push_back(1);
        else if (c == '-')
            f.push_back(-1);
        else
            throw std::invalid_argument("assignment string must consist of '+'/'-'");
    }
    return f;
}

struct Evaluation {
    bool valid;
    int total;
    std::vector<int> violating_vertices;
};

inline Evaluation evaluate(const Graph& g, Variant variant, const Assignment& f) {
    if (static_cast<int>(f.size()) != g.order())
        throw std::invalid_argument("assignment length " + std::to_string(f.size()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
    Evaluation ev{true, 0, {}};
    for (int v = 0; v < g.order(); ++v) {
        ev.total += f[v];
        int s = variant.closed ? f[v] : 0;
        g.for_neighbors(v, [&](int u) { s += f[u]; });
        if (!variant.constraint_ok(s)) {
            ev.valid = false;
            ev.violating_vertices.push_back(v);
        }
    }
    return ev;
}

}  // namespace decnum
