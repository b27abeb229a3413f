#ifndef PEBBLING_STRATEGY_HPP
#define PEBBLING_STRATEGY_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/families.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

namespace pebbling {

class StrategyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rooted subtree of a host graph with a weight on every vertex.
///
/// parent[v] is the tree parent of v, -1 when v is off the tree, and the root
/// is its own parent. Weights are zero off the tree and at the root.
struct Strategy {
    Vertex root = 0;
    std::vector<Vertex> parent;
    std::vector<Rational> weight;

    Strategy() = default;
    Strategy(int order, Vertex r)
        : root(r), parent(static_cast<std::size_t>(order), -1), weight(static_cast<std::size_t>(order), Rational(0)) {
        parent.at(static_cast<std::size_t>(r)) = r;
    }

    int order() const { return static_cast<int>(parent.size()); }
    bool in_tree(Vertex v) const { return parent.at(static_cast<std::size_t>(v)) != -1; }
    const Rational& operator[](Vertex v) const { return weight.at(static_cast<std::size_t>(v)); }

    void attach(Vertex child, Vertex par, Rational w) {
        parent.at(static_cast<std::size_t>(child)) = par;
        weight.at(static_cast<std::size_t>(child)) = std::move(w);
    }

    /// Tree edges as (parent, child), ordered by child.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex v = 0; v < order(); ++v)
            if (v != root && in_tree(v)) out.emplace_back(parent[static_cast<std::size_t>(v)], v);
        return out;
    }

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

enum class StrategyKind { basic, nonbasic, invalid };

inline std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::basic: return "basic";
        case StrategyKind::nonbasic: return "nonbasic";
        case StrategyKind::invalid: return "invalid";
    }
    return "invalid";
}

struct StrategyCheck {
    StrategyKind kind = StrategyKind::invalid;
    std::string reason;
    explicit operator bool() const { return kind != StrategyKind::invalid; }
};

/// Basic strategies have w(parent) = 2 w(v) wherever the parent is not the
/// root; nonbasic ones only w(parent) >= 2 w(v), strictly somewhere.
inline StrategyCheck validate_strategy(const Graph& g, const Strategy& s) {
    auto invalid = [](std::string why) { return StrategyCheck{StrategyKind::invalid, std::move(why)}; };
    const int n = g.order();
    if (s.order() != n || static_cast<int>(s.weight.size()) != n)
        return invalid("strategy covers " + std::to_string(s.order()) + " vertices but the graph has " + std::to_string(n));
    if (!g.contains(s.root)) return invalid("root " + std::to_string(s.root) + " is not a vertex");
    if (s.parent[static_cast<std::size_t>(s.root)] != s.root) return invalid("the root must be its own parent");
    if (s[s.root] != 0) return invalid("the root must have weight 0");

    bool strict = false;
    for (Vertex v = 0; v < n; ++v) {
        const std::string at = "vertex " + std::to_string(v);
        if (v == s.root) continue;
        if (!s.in_tree(v)) {
            if (s[v] != 0) return invalid(at + " is off the tree but has nonzero weight");
            continue;
        }
        const Vertex p = s.parent[static_cast<std::size_t>(v)];
        if (!g.contains(p) || !s.in_tree(p)) return invalid(at + " has a parent outside the tree");
        if (!g.has_edge(v, p)) return invalid("tree edge " + std::to_string(p) + "-" + std::to_string(v) + " is not in the graph");
        if (s[v] <= 0) return invalid(at + " is on the tree but has weight " + to_string(s[v]));
        Vertex up = v;
        for (int steps = 0; up != s.root; ++steps) {
            if (steps > n) return invalid(at + " does not reach the root");
            up = s.parent[static_cast<std::size_t>(up)];
        }
        if (p == s.root) continue;
        if (s[p] < 2 * s[v])
            return invalid("weight at " + std::to_string(p) + " is below twice the weight at its child " + std::to_string(v));
        if (s[p] != 2 * s[v]) strict = true;
    }
    return {strict ? StrategyKind::nonbasic : StrategyKind::basic, {}};
}

/// w(T): sum of all vertex weights.
inline Rational strategy_total(const Strategy& s) {
    Rational total = 0;
    for (const auto& w : s.weight) total += w;
    return total;
}

/// w(f) = sum_v w(v) f(v).
inline Rational strategy_weight_of(const Strategy& s, const Configuration& f) {
    if (f.order() != s.order()) throw ConfigurationError("configuration and strategy sizes differ");
    Rational total = 0;
    for (Vertex v = 0; v < f.order(); ++v)
        if (f[v]) total += s[v] * f[v];
    return total;
}

enum class WflVerdict { satisfied, violated };

/// Every r-unsolvable f satisfies w(f) <= w(T); a violation proves f solvable.
inline WflVerdict check_wfl(const Strategy& s, const Configuration& f) {
    return strategy_weight_of(s, f) <= strategy_total(s) ? WflVerdict::satisfied : WflVerdict::violated;
}

namespace detail {

inline std::vector<int> tree_depths(const Strategy& s) {
    std::vector<int> depth(static_cast<std::size_t>(s.order()), -1);
    for (Vertex v = 0; v < s.order(); ++v) {
        if (!s.in_tree(v)) continue;
        int d = 0;
        for (Vertex up = v; up != s.root; up = s.parent[static_cast<std::size_t>(up)]) ++d;
        depth[static_cast<std::size_t>(v)] = d;
    }
    return depth;
}

inline Vertex branch_of(const Strategy& s, Vertex v) {
    while (s.parent[static_cast<std::size_t>(v)] != s.root) v = s.parent[static_cast<std::size_t>(v)];
    return v;
}

inline Rational rational_pow2(int k) { return Rational(BigInt(1) << k); }

}  // namespace detail

/// Writes a valid strategy as sum c_i T_i with each T_i basic. The supports
/// shrink from one term to the next, and each term's deepest leaf has
/// weight 1.
inline std::vector<std::pair<Rational, Strategy>> decompose_nonbasic(const Graph& g, const Strategy& s) {
    const auto check = validate_strategy(g, s);
    if (!check) throw StrategyError("cannot decompose an invalid strategy: " + check.reason);
    std::vector<std::pair<Rational, Strategy>> out;
    if (check.kind == StrategyKind::basic) {
        out.emplace_back(Rational(1), s);
        return out;
    }
    const int n = s.order();
    const auto depth = detail::tree_depths(s);
    std::vector<Rational> residual = s.weight;
    for (;;) {
        // Support is upward closed, so it is a subtree; each root branch gets
        // a doubling profile scaled to its tightest vertex.
        std::vector<int> height(static_cast<std::size_t>(n), -1);
        for (Vertex v = 0; v < n; ++v)
            if (v != s.root && residual[static_cast<std::size_t>(v)] > 0) {
                auto& h = height[static_cast<std::size_t>(detail::branch_of(s, v))];
                h = std::max(h, depth[static_cast<std::size_t>(v)]);
            }
        std::vector<std::optional<Rational>> scale(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            if (v == s.root || residual[static_cast<std::size_t>(v)] <= 0) continue;
            const Vertex b = detail::branch_of(s, v);
            Rational ratio = residual[static_cast<std::size_t>(v)] /
                             detail::rational_pow2(height[static_cast<std::size_t>(b)] - depth[static_cast<std::size_t>(v)]);
            auto& sc = scale[static_cast<std::size_t>(b)];
            if (!sc || ratio < *sc) sc = ratio;
        }
        std::optional<Vertex> lead;
        for (Vertex b = 0; b < n; ++b)
            if (scale[static_cast<std::size_t>(b)] &&
                (!lead || height[static_cast<std::size_t>(b)] > height[static_cast<std::size_t>(*lead)]))
                lead = b;
        if (!lead) break;

        const Rational coefficient = *scale[static_cast<std::size_t>(*lead)];
        Strategy part(n, s.root);
        for (Vertex v = 0; v < n; ++v) {
            if (v == s.root || residual[static_cast<std::size_t>(v)] <= 0) continue;
            const Vertex b = detail::branch_of(s, v);
            const Rational amount = *scale[static_cast<std::size_t>(b)] *
                                    detail::rational_pow2(height[static_cast<std::size_t>(b)] - depth[static_cast<std::size_t>(v)]);
            part.attach(v, s.parent[static_cast<std::size_t>(v)], amount / coefficient);
        }
        for (Vertex v = 0; v < n; ++v) residual[static_cast<std::size_t>(v)] -= coefficient * part[v];
        out.emplace_back(coefficient, std::move(part));
    }
    return out;
}

namespace detail {

inline Strategy path_strategy(int order, const std::vector<Vertex>& path) {
    Strategy s(order, path.front());
    const int len = static_cast<int>(path.size()) - 1;
    for (int i = 1; i <= len; ++i)
        s.attach(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i - 1)], rational_pow2(len - i));
    return s;
}

}  // namespace detail

/// The two spanning-tree strategies of the para chain Q_n rooted at the
/// terminal 0: one threads each square through its local vertex 1, the other
/// through local vertex 3.
inline std::vector<Strategy> para_chain_strategies(int n) {
    if (n < 1) throw StrategyError("para chain strategies need n >= 1");
    const int order = 3 * n + 1;
    std::vector<Strategy> out;
    for (Vertex side : {1, 3}) {
        std::vector<Vertex> path{0, side, 2};
        for (int k = 1; k < n; ++k) {
            path.push_back(3 * k + side);
            path.push_back(3 * k + 2);
        }
        out.push_back(detail::path_strategy(order, path));
    }
    return out;
}

/// Strategies for the ortho chain O_n rooted at the terminal 0. Each follows
/// the cut vertices from 0 to the far vertex, entering the first and last
/// squares through local vertex 1 or 3, and hangs the two remaining vertices
/// of every internal square off its cut vertices with weight 1.
inline std::vector<Strategy> ortho_chain_strategies(int n) {
    if (n < 1) throw StrategyError("ortho chain strategies need n >= 1");
    if (n == 1) return para_chain_strategies(1);
    const int order = 3 * n + 1;
    auto exit_of = [](int k) { return k == 0 ? 2 : 3 * k + 1; };
    std::vector<Strategy> out;
    for (Vertex side : {1, 3}) {
        std::vector<Vertex> path{0, side};
        for (int k = 0; k + 1 < n; ++k) path.push_back(exit_of(k));
        path.push_back(3 * (n - 1) + side);
        path.push_back(3 * (n - 1) + 2);
        Strategy s = detail::path_strategy(order, path);
        for (int k = 1; k + 1 < n; ++k) {
            s.attach(3 * k + 3, exit_of(k - 1), Rational(1));
            s.attach(3 * k + 2, exit_of(k), Rational(1));
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace pebbling

#endif  // PEBBLING_STRATEGY_HPP
