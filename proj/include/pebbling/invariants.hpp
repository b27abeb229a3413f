#ifndef PEBBLING_INVARIANTS_HPP
#define PEBBLING_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

struct SearchOptions {
    /// Search nodes allowed per rooted search (branch-and-bound nodes and
    /// solvability nodes are counted separately against this figure).
    std::uint64_t budget = 10'000'000;
    /// Known upper bound on the weight of any t-fold unsolvable configuration
    /// (e.g. the floor of a weight-function LP optimum). Lets the search stop
    /// as soon as a witness meets it.
    std::optional<std::int64_t> unsolvable_weight_bound;
    /// Replace the first maximum found by the lexicographically least one.
    bool lexicographic_witness = true;
};

/// Value of a pebbling invariant with the configuration that certifies it.
///
/// For pi-type values the witness is an unsolvable configuration of weight
/// value-1; for optimal-pebbling values it is a solvable configuration of
/// weight value. When the budget runs out `exhaustive` is false, `value`
/// equals `lower`, and [lower, upper] brackets the true value.
struct InvariantResult {
    std::int64_t value = 0;
    Configuration witness;
    std::optional<Vertex> root;
    bool exhaustive = true;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Linear consequence of unsolvability on a rooted subtree T: pushing up T
/// greedily is exact on T, and floor(x/2) >= (x-1)/2 gives
///   sum_{v != r} f(v) 2^-depth(v) + f(r) <= t - 1 + sum_{v in T, v != r} 2^-depth(v).
/// Stored scaled by 2^height(T) as integer coefficients.
struct TreeInequality {
    std::vector<std::int64_t> coeff;  // per vertex, 0 off the tree
    std::int64_t rhs = 0;
    std::vector<Vertex> by_coeff;     // vertices sorted by coefficient, ascending
};

inline TreeInequality make_tree_inequality(const std::vector<Vertex>& parent, Vertex root, int t) {
    const int n = static_cast<int>(parent.size());
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    depth[static_cast<std::size_t>(root)] = 0;
    int height = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            const Vertex p = parent[static_cast<std::size_t>(v)];
            if (v == root || p < 0 || depth[static_cast<std::size_t>(v)] >= 0 || depth[static_cast<std::size_t>(p)] < 0) continue;
            depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
            height = std::max(height, depth[static_cast<std::size_t>(v)]);
            changed = true;
        }
    }
    TreeInequality ineq;
    ineq.coeff.assign(static_cast<std::size_t>(n), 0);
    ineq.rhs = static_cast<std::int64_t>(t - 1) << height;
    for (Vertex v = 0; v < n; ++v) {
        if (depth[static_cast<std::size_t>(v)] < 0) continue;
        ineq.coeff[static_cast<std::size_t>(v)] = std::int64_t{1} << (height - depth[static_cast<std::size_t>(v)]);
        if (v != root) ineq.rhs += ineq.coeff[static_cast<std::size_t>(v)];
    }
    for (Vertex v = 0; v < n; ++v) ineq.by_coeff.push_back(v);
    std::stable_sort(ineq.by_coeff.begin(), ineq.by_coeff.end(), [&](Vertex a, Vertex b) {
        return ineq.coeff[static_cast<std::size_t>(a)] < ineq.coeff[static_cast<std::size_t>(b)];
    });
    return ineq;
}

/// Branch-and-bound over configurations for the maximum-weight t-fold
/// r-unsolvable configuration. Unsolvable configurations form a down-set,
/// so each vertex's count is bounded by the largest value keeping the
/// partial configuration unsolvable (found by bisection), and subtrees are
/// cut with a fractional-knapsack bound over the tree inequalities.
class MaxUnsolvableSearch {
public:
    MaxUnsolvableSearch(const Graph& g, Vertex root, int t, std::uint64_t budget)
        : solver_(g, root, t), n_(g.order()), root_(root), t_(t), budget_(budget) {
        solver_.set_budget(budget);
        const auto& dist = solver_.distances_to_root();
        static_cap_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            static_cap_[static_cast<std::size_t>(v)] =
                v == root ? t - 1 : std::min<std::int64_t>(kMaxPebblesPerVertex, (static_cast<std::int64_t>(t) << dist[static_cast<std::size_t>(v)]) - 1);

        // Shortest-path trees (lowest / highest id parent) and every
        // root-to-vertex shortest path.
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<Vertex> parent(static_cast<std::size_t>(n_), -1);
            for (Vertex v = 0; v < n_; ++v) {
                if (v == root) continue;
                for (Vertex u : g.neighbors(v))
                    if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] - 1) {
                        parent[static_cast<std::size_t>(v)] = u;
                        if (variant == 0) break;
                    }
            }
            if (variant == 0) bfs_parent_ = parent;
            inequalities_.push_back(make_tree_inequality(parent, root, t));
        }
        for (Vertex target = 0; target < n_; ++target) {
            if (target == root) continue;
            std::vector<Vertex> parent(static_cast<std::size_t>(n_), -1);
            for (Vertex v = target; v != root; v = bfs_parent_[static_cast<std::size_t>(v)])
                parent[static_cast<std::size_t>(v)] = bfs_parent_[static_cast<std::size_t>(v)];
            inequalities_.push_back(make_tree_inequality(parent, root, t));
        }
    }

    /// Largest weight of an unsolvable configuration strictly above `floor`,
    /// or nullopt if none exists. Throws SearchBudgetExceeded.
    std::optional<Configuration> maximize(std::int64_t floor, std::optional<std::int64_t> ceiling) {
        mode_ = Mode::maximize;
        best_ = floor;
        ceiling_ = ceiling;
        found_.reset();
        order_ = vertices_far_first();
        run();
        return found_;
    }

    /// Lexicographically least unsolvable configuration of exactly `weight`.
    std::optional<Configuration> lexicographically_least(std::int64_t weight) {
        mode_ = Mode::find_least;
        best_ = weight;
        found_.reset();
        order_.clear();
        for (Vertex v = 0; v < n_; ++v) order_.push_back(v);
        run();
        return found_;
    }

    std::uint64_t nodes() const { return nodes_ + solver_.nodes(); }
    const RootedSolver& solver() const { return solver_; }

    std::vector<Vertex> vertices_far_first() const {
        std::vector<Vertex> order;
        for (Vertex v = 0; v < n_; ++v) order.push_back(v);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return solver_.dist(a) > solver_.dist(b); });
        return order;
    }

private:
    enum class Mode { maximize, find_least };

    void run() {
        counts_ = {};
        assigned_.assign(static_cast<std::size_t>(n_), false);
        slack_.clear();
        for (const auto& ineq : inequalities_) slack_.push_back(ineq.rhs);
        done_ = false;
        branch(0, 0);
    }

    // Fractional knapsack over the unassigned vertices for one inequality.
    std::int64_t knapsack(std::size_t which, std::int64_t slack) const {
        const TreeInequality& ineq = inequalities_[which];
        std::int64_t total = 0;
        for (Vertex v : ineq.by_coeff) {
            if (assigned_[static_cast<std::size_t>(v)]) continue;
            const std::int64_t cap = static_cap_[static_cast<std::size_t>(v)];
            const std::int64_t a = ineq.coeff[static_cast<std::size_t>(v)];
            if (a == 0) {
                total += cap;
                continue;
            }
            const std::int64_t take = std::min(cap, slack / a);
            total += take;
            slack -= take * a;
            if (take < cap) break;
        }
        return total;
    }

    std::int64_t remaining_bound() const {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < inequalities_.size(); ++i) best = std::min(best, knapsack(i, slack_[i]));
        return best;
    }

    bool unsolvable_with(Vertex v, std::int64_t c) {
        counts_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(c);
        const bool solvable = solver_.solvable_packed(counts_);
        counts_[static_cast<std::size_t>(v)] = 0;
        return !solvable;
    }

    void tick() {
        if (budget_ && nodes_ >= budget_) throw SearchBudgetExceeded(budget_);
        ++nodes_;
    }

    void branch(std::size_t depth, std::int64_t weight) {
        if (done_) return;
        tick();
        if (depth == order_.size()) {
            if (mode_ == Mode::maximize && weight > best_) {
                best_ = weight;
                found_ = unpack();
                if (ceiling_ && best_ >= *ceiling_) done_ = true;
            } else if (mode_ == Mode::find_least && weight == best_) {
                found_ = unpack();
                done_ = true;
            }
            return;
        }
        const Vertex v = order_[depth];
        // Upper limit from the inequalities, then bisection on the down-set.
        std::int64_t hi = static_cap_[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < inequalities_.size(); ++i) {
            const std::int64_t a = inequalities_[i].coeff[static_cast<std::size_t>(v)];
            if (a > 0) hi = std::min(hi, slack_[i] / a);
        }
        if (mode_ == Mode::find_least) hi = std::min(hi, best_ - weight);
        if (hi < 0) return;
        std::int64_t lo = 0;  // the current partial configuration is unsolvable
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo + 1) / 2;
            if (unsolvable_with(v, mid))
                lo = mid;
            else
                hi = mid - 1;
        }
        const std::int64_t cap = lo;

        assigned_[static_cast<std::size_t>(v)] = true;
        auto visit = [&](std::int64_t c) {
            for (std::size_t i = 0; i < inequalities_.size(); ++i)
                slack_[i] -= c * inequalities_[i].coeff[static_cast<std::size_t>(v)];
            const std::int64_t bound = weight + c + remaining_bound();
            const bool promising = mode_ == Mode::maximize ? bound > best_ && (!ceiling_ || weight + c <= *ceiling_)
                                                           : bound >= best_;
            if (promising) {
                counts_[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(c);
                branch(depth + 1, weight + c);
                counts_[static_cast<std::size_t>(v)] = 0;
            }
            for (std::size_t i = 0; i < inequalities_.size(); ++i)
                slack_[i] += c * inequalities_[i].coeff[static_cast<std::size_t>(v)];
        };
        if (mode_ == Mode::maximize) {
            for (std::int64_t c = cap; c >= 0 && !done_; --c) visit(c);
        } else {
            for (std::int64_t c = 0; c <= cap && !done_; ++c) visit(c);
        }
        assigned_[static_cast<std::size_t>(v)] = false;
    }

    Configuration unpack() const {
        Configuration f(n_);
        for (Vertex v = 0; v < n_; ++v) f.set(v, counts_[static_cast<std::size_t>(v)]);
        return f;
    }

    RootedSolver solver_;
    int n_;
    Vertex root_;
    int t_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::int64_t> static_cap_;
    std::vector<Vertex> bfs_parent_;
    std::vector<TreeInequality> inequalities_;

    Mode mode_ = Mode::maximize;
    std::vector<Vertex> order_;
    detail::Counts counts_{};
    std::vector<bool> assigned_;
    std::vector<std::int64_t> slack_;
    std::int64_t best_ = 0;
    std::optional<std::int64_t> ceiling_;
    std::optional<Configuration> found_;
    bool done_ = false;
};

inline void require_connected(const Graph& g) {
    if (!is_connected(g)) throw GraphError("pebbling invariants require a connected graph");
}

/// t 2^ecc(r) - 1 pebbles on the lowest-id vertex farthest from r.
inline Configuration far_vertex_witness(const Graph& g, Vertex r, int t) {
    auto dist = distances(g, r);
    Vertex far = static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    const std::int64_t pebbles = (static_cast<std::int64_t>(t) << dist[static_cast<std::size_t>(far)]) - 1;
    return Configuration::single(g.order(), far, static_cast<int>(std::min<std::int64_t>(pebbles, kMaxPebblesPerVertex)));
}

// Sum of single-vertex caps: every unsolvable f has f(v) < t 2^dist(v,r).
inline std::int64_t trivial_unsolvable_bound(const Graph& g, Vertex r, int t) {
    std::int64_t total = t - 1;
    auto dist = distances(g, r);
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != r) total += (static_cast<std::int64_t>(t) << dist[static_cast<std::size_t>(v)]) - 1;
    return total;
}

}  // namespace detail

/// pi_t(G, r): one more than the largest weight of a t-fold r-unsolvable
/// configuration.
inline InvariantResult pebbling_number_rooted(const Graph& g, Vertex r, int t = 1, const SearchOptions& options = {}) {
    detail::require_connected(g);
    if (!g.contains(r)) throw GraphError("target vertex out of range");
    detail::MaxUnsolvableSearch search(g, r, t, options.budget);
    InvariantResult out;
    out.root = r;
    Configuration best = detail::far_vertex_witness(g, r, t);
    try {
        if (!options.unsolvable_weight_bound || best.weight() < *options.unsolvable_weight_bound)
            if (auto better = search.maximize(best.weight(), options.unsolvable_weight_bound)) best = *better;
        if (options.lexicographic_witness)
            if (auto least = search.lexicographically_least(best.weight())) best = *least;
        out.value = best.weight() + 1;
        out.lower = out.upper = out.value;
    } catch (const SearchBudgetExceeded&) {
        out.exhaustive = false;
        out.lower = out.value = best.weight() + 1;
        std::int64_t upper = detail::trivial_unsolvable_bound(g, r, t);
        if (options.unsolvable_weight_bound) upper = std::min(upper, *options.unsolvable_weight_bound);
        out.upper = upper + 1;
    }
    out.witness = best;
    out.nodes = search.nodes();
    return out;
}

/// pi_t(G) = max over targets of pi_t(G, r); `root` records the first
/// maximizing target in order of decreasing eccentricity, then id.
inline InvariantResult pebbling_number(const Graph& g, int t = 1, const SearchOptions& options = {}) {
    detail::require_connected(g);
    std::vector<Vertex> roots;
    std::vector<int> ecc;
    for (Vertex v = 0; v < g.order(); ++v) {
        roots.push_back(v);
        ecc.push_back(eccentricity(g, v));
    }
    std::stable_sort(roots.begin(), roots.end(),
                     [&](Vertex a, Vertex b) { return ecc[static_cast<std::size_t>(a)] > ecc[static_cast<std::size_t>(b)]; });

    InvariantResult out;
    std::int64_t best_weight = -1;
    std::int64_t upper_weight = -1;
    Vertex best_root = roots.front();
    Configuration best;
    for (Vertex r : roots) {
        detail::MaxUnsolvableSearch search(g, r, t, options.budget);
        Configuration seed = detail::far_vertex_witness(g, r, t);
        try {
            if (seed.weight() > best_weight) {
                best_weight = seed.weight();
                best_root = r;
                best = seed;
            }
            if (auto better = search.maximize(best_weight, std::nullopt)) {
                best_weight = better->weight();
                best_root = r;
                best = *better;
            }
        } catch (const SearchBudgetExceeded&) {
            out.exhaustive = false;
            upper_weight = std::max(upper_weight, detail::trivial_unsolvable_bound(g, r, t));
        }
        out.nodes += search.nodes();
    }
    if (out.exhaustive && options.lexicographic_witness) {
        detail::MaxUnsolvableSearch search(g, best_root, t, options.budget);
        try {
            if (auto least = search.lexicographically_least(best_weight)) best = *least;
        } catch (const SearchBudgetExceeded&) {
            // keep the first witness found; the value itself is exact
        }
        out.nodes += search.nodes();
    }
    out.value = out.lower = best_weight + 1;
    out.upper = out.exhaustive ? out.value : std::max(best_weight, upper_weight) + 1;
    out.root = best_root;
    out.witness = best;
    return out;
}

namespace detail {

// Calls visit(f) for every configuration of exactly `weight` with entries
// <= cap, in lexicographically ascending order, until visit returns true.
template <typename Visit>
bool for_each_configuration(int order, int weight, int cap, Visit&& visit) {
    std::vector<int> counts(static_cast<std::size_t>(order), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> bool {
        if (pos == order - 1) {
            if (remaining > cap) return false;
            counts[static_cast<std::size_t>(pos)] = remaining;
            const bool stop = visit(Configuration(counts));
            counts[static_cast<std::size_t>(pos)] = 0;
            return stop;
        }
        const long long room = static_cast<long long>(cap) * (order - pos - 1);
        const int lo = static_cast<int>(std::max<long long>(0, remaining - room));
        const int hi = std::min(cap, remaining);
        for (int c = lo; c <= hi; ++c) {
            counts[static_cast<std::size_t>(pos)] = c;
            if (self(self, pos + 1, remaining - c)) return true;
        }
        counts[static_cast<std::size_t>(pos)] = 0;
        return false;
    };
    if (order == 0) return false;
    return rec(rec, 0, weight);
}

}  // namespace detail

/// pi*(G) (no cap) or pi*_t(G) (at most `per_vertex_cap` pebbles per vertex
/// initially): the least weight of a configuration solvable for every target.
/// The witness is the lexicographically least such configuration.
inline InvariantResult optimal_pebbling(const Graph& g, std::optional<int> per_vertex_cap = std::nullopt,
                                        const SearchOptions& options = {}) {
    detail::require_connected(g);
    if (per_vertex_cap && *per_vertex_cap < 1) throw std::invalid_argument("per-vertex cap must be >= 1");
    const int n = g.order();
    std::vector<RootedSolver> targets;
    targets.reserve(static_cast<std::size_t>(n));
    for (Vertex r = 0; r < n; ++r) {
        targets.emplace_back(g, r, 1);
        targets.back().set_budget(options.budget);
    }
    InvariantResult out;
    std::uint64_t visited = 0;
    auto total_nodes = [&] {
        std::uint64_t s = visited;
        for (const auto& solver : targets) s += solver.nodes();
        return s;
    };
    // One pebble everywhere always works; 2^diam on one vertex works when the cap allows it.
    std::int64_t limit = n;
    const std::int64_t stack = std::int64_t{1} << std::min(diameter(g), 30);
    if (!per_vertex_cap || *per_vertex_cap >= stack) limit = std::min(limit, stack);
    try {
        for (std::int64_t w = 1; w <= limit; ++w) {
            const int cap = per_vertex_cap ? std::min<int>(*per_vertex_cap, static_cast<int>(w)) : static_cast<int>(w);
            if (static_cast<std::int64_t>(cap) * n < w) continue;
            std::optional<Configuration> found;
            detail::for_each_configuration(n, static_cast<int>(w), cap, [&](const Configuration& f) {
                if (options.budget && ++visited > options.budget) throw SearchBudgetExceeded(options.budget);
                for (auto& solver : targets)
                    if (!solver.solvable(f)) return false;
                found = f;
                return true;
            });
            if (found) {
                out.value = out.lower = out.upper = w;
                out.witness = *found;
                out.nodes = total_nodes();
                return out;
            }
            out.lower = w + 1;
        }
    } catch (const SearchBudgetExceeded&) {
        out.exhaustive = false;
        out.value = out.lower;
        out.upper = limit;
        out.witness = Configuration(n);
        out.nodes = total_nodes();
        return out;
    }
    throw std::logic_error("optimal pebbling search exceeded its own upper bound");
}

enum class PebblingClass { class0, class1, neither };

inline std::string to_string(PebblingClass c) {
    switch (c) {
        case PebblingClass::class0: return "Class0";
        case PebblingClass::class1: return "Class1";
        case PebblingClass::neither: return "neither";
    }
    return "neither";
}

/// Class 0 iff pi(G) = |V|, Class 1 iff pi(G) = |V| + 1.
inline PebblingClass classify(const Graph& g, const SearchOptions& options = {}) {
    SearchOptions opts = options;
    opts.lexicographic_witness = false;
    InvariantResult pi = pebbling_number(g, 1, opts);
    if (!pi.exhaustive) throw SearchBudgetExceeded(options.budget);
    if (pi.value == g.order()) return PebblingClass::class0;
    if (pi.value == g.order() + 1) return PebblingClass::class1;
    return PebblingClass::neither;
}

}  // namespace pebbling

#endif  // PEBBLING_INVARIANTS_HPP
