#ifndef PEBBLING_SOLVER_HPP
#define PEBBLING_SOLVER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Which pebbling steps a search may use, relative to the target r.
enum class MovePolicy {
    any,
    semigreedy,  // dist(to, r) <= dist(from, r)
    greedy,      // dist(to, r) <  dist(from, r)
};

class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(std::uint64_t nodes)
        : std::runtime_error("search budget of " + std::to_string(nodes) + " nodes exhausted"), nodes_(nodes) {}
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

inline constexpr int kMaxSolverOrder = 32;
inline constexpr int kMaxSolverEccentricity = 30;
inline constexpr int kMaxPebblesPerVertex = 65535;

namespace detail {

using Counts = std::array<std::uint16_t, kMaxSolverOrder>;

struct CountsHash {
    std::size_t operator()(const Counts& c) const noexcept {
        std::uint64_t words[kMaxSolverOrder / 4];
        std::memcpy(words, c.data(), sizeof words);
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t w : words) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

using CountsSet = std::unordered_set<Counts, CountsHash>;

}  // namespace detail

/// Exact t-fold solvability for one graph, target and policy.
///
/// Depth-first search over configurations reachable by single steps. Every
/// step lowers the total by one, so the state graph is acyclic and a state
/// proven unsolvable stays unsolvable; those states are cached across
/// queries. Two cutoffs run before any branching:
///   - the distance potential sum f(v) 2^-dist(v,r) never increases under a
///     step, so a potential below t proves the state unsolvable;
///   - pushing pebbles greedily up a shortest-path tree is a valid strategy,
///     so success there proves the state solvable.
/// Steps out of the target are never taken.
class RootedSolver {
public:
    RootedSolver(const Graph& g, Vertex root, int t = 1, MovePolicy policy = MovePolicy::any)
        : order_(g.order()), root_(root), t_(t), policy_(policy) {
        if (!g.contains(root)) throw GraphError("target vertex out of range");
        if (t < 1) throw std::invalid_argument("t-fold target needs t >= 1");
        if (g.order() > kMaxSolverOrder)
            throw std::invalid_argument("solver supports graphs of order <= " + std::to_string(kMaxSolverOrder));
        dist_ = distances(g, root);
        for (int d : dist_)
            if (d == kUnreachable) throw GraphError("solver requires a connected graph");
        depth_ = *std::max_element(dist_.begin(), dist_.end());
        if (depth_ > kMaxSolverEccentricity) throw std::invalid_argument("target eccentricity too large for the solver");
        need_ = static_cast<std::int64_t>(t_) << depth_;
        for (Vertex v = 0; v < order_; ++v) place_[static_cast<std::size_t>(v)] = std::int64_t{1} << (depth_ - dist(v));

        // Vertices nearest the target fire first; steps toward the target first.
        for (Vertex v = 0; v < order_; ++v)
            if (v != root_) sources_.push_back(v);
        std::stable_sort(sources_.begin(), sources_.end(), [&](Vertex a, Vertex b) { return dist(a) < dist(b); });
        steps_.resize(static_cast<std::size_t>(order_));
        for (Vertex u = 0; u < order_; ++u) {
            for (Vertex v : g.neighbors(u)) {
                if (policy_ == MovePolicy::greedy && dist(v) >= dist(u)) continue;
                if (policy_ == MovePolicy::semigreedy && dist(v) > dist(u)) continue;
                steps_[static_cast<std::size_t>(u)].push_back(v);
            }
            std::stable_sort(steps_[static_cast<std::size_t>(u)].begin(), steps_[static_cast<std::size_t>(u)].end(),
                             [&](Vertex a, Vertex b) { return dist(a) < dist(b); });
        }

        // Two shortest-path trees: lowest-id and highest-id closer neighbour.
        bottom_up_ = sources_;
        std::reverse(bottom_up_.begin(), bottom_up_.end());
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<Vertex> parent(static_cast<std::size_t>(order_), -1);
            for (Vertex v : sources_) {
                for (Vertex u : g.neighbors(v))
                    if (dist(u) == dist(v) - 1) {
                        parent[static_cast<std::size_t>(v)] = u;
                        if (variant == 0) break;
                    }
            }
            trees_.push_back(std::move(parent));
        }
    }

    Vertex root() const { return root_; }
    int fold() const { return t_; }
    int order() const { return order_; }
    int dist(Vertex v) const { return dist_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& distances_to_root() const { return dist_; }

    /// 0 means unlimited. Counts expanded search nodes since the last reset.
    void set_budget(std::uint64_t max_nodes) { budget_ = max_nodes; }
    std::uint64_t nodes() const { return nodes_; }
    void reset_nodes() { nodes_ = 0; }

    bool solvable(const Configuration& f) {
        detail::Counts c = pack(f);
        return solvable_packed(c);
    }

    /// A replayable witness when f is t-fold solvable.
    std::optional<MoveSequence> solve(const Configuration& f) {
        detail::Counts c = pack(f);
        MoveSequence trail;
        if (search(c, potential_of(c), &trail)) return trail;
        return std::nullopt;
    }

    /// Scaled potential: sum f(v) 2^(depth - dist(v)); unsolvable when < t 2^depth.
    std::int64_t potential(const Configuration& f) const { return potential_of(pack(f)); }
    std::int64_t potential_threshold() const { return need_; }
    int potential_scale_exponent() const { return depth_; }

    bool solvable_packed(detail::Counts& c) {
        if (known_solvable_.count(c)) return true;
        return search(c, potential_of(c), nullptr);
    }

    detail::Counts pack(const Configuration& f) const {
        if (f.order() != order_) check_size(f);
        detail::Counts c{};
        for (Vertex v = 0; v < order_; ++v) {
            if (f[v] > kMaxPebblesPerVertex) throw ConfigurationError("pebble count too large for the solver");
            c[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(f[v]);
        }
        return c;
    }

    std::int64_t potential_of(const detail::Counts& c) const {
        std::int64_t p = 0;
        for (Vertex v = 0; v < order_; ++v) p += c[static_cast<std::size_t>(v)] * place_[static_cast<std::size_t>(v)];
        return p;
    }

    void clear_cache() {
        dead_.clear();
        known_solvable_.clear();
    }

private:
    void check_size(const Configuration& f) const {
        throw ConfigurationError("configuration has " + std::to_string(f.order()) + " entries, graph has " +
                                 std::to_string(order_));
    }

    bool tree_push(const detail::Counts& c, MoveSequence* trail) const {
        for (const auto& parent : trees_) {
            std::array<std::int64_t, kMaxSolverOrder> acc{};
            for (Vertex v = 0; v < order_; ++v) acc[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v)];
            for (Vertex v : bottom_up_) acc[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] += acc[static_cast<std::size_t>(v)] / 2;
            if (acc[static_cast<std::size_t>(root_)] < t_) continue;
            if (trail) {
                for (Vertex v = 0; v < order_; ++v) acc[static_cast<std::size_t>(v)] = c[static_cast<std::size_t>(v)];
                for (Vertex v : bottom_up_) {
                    const Vertex p = parent[static_cast<std::size_t>(v)];
                    const std::int64_t k = acc[static_cast<std::size_t>(v)] / 2;
                    for (std::int64_t i = 0; i < k; ++i) trail->push_back({v, p});
                    acc[static_cast<std::size_t>(p)] += k;
                }
            }
            return true;
        }
        return false;
    }

    bool search(detail::Counts& c, std::int64_t pot, MoveSequence* trail) {
        if (c[static_cast<std::size_t>(root_)] >= t_) return true;
        if (pot < need_) return false;
        if (tree_push(c, trail)) return true;
        if (dead_.count(c)) return false;
        if (!trail && known_solvable_.count(c)) return true;
        if (budget_ && nodes_ >= budget_) throw SearchBudgetExceeded(budget_);
        ++nodes_;
        if (dead_.size() > kCacheLimit) dead_.clear();
        if (known_solvable_.size() > kCacheLimit) known_solvable_.clear();

        for (Vertex u : sources_) {
            auto& cu = c[static_cast<std::size_t>(u)];
            if (cu < 2) continue;
            for (Vertex v : steps_[static_cast<std::size_t>(u)]) {
                const std::int64_t next = pot - 2 * place_[static_cast<std::size_t>(u)] + place_[static_cast<std::size_t>(v)];
                if (next < need_) continue;
                cu = static_cast<std::uint16_t>(cu - 2);
                c[static_cast<std::size_t>(v)] += 1;
                if (trail) trail->push_back({u, v});
                const bool ok = search(c, next, trail);
                cu = static_cast<std::uint16_t>(cu + 2);
                c[static_cast<std::size_t>(v)] -= 1;
                if (ok) {
                    known_solvable_.insert(c);
                    return true;
                }
                if (trail) trail->pop_back();
            }
        }
        dead_.insert(c);
        return false;
    }

    static constexpr std::size_t kCacheLimit = 8'000'000;

    int order_;
    Vertex root_;
    int t_;
    MovePolicy policy_;
    std::vector<int> dist_;
    int depth_ = 0;
    std::int64_t need_ = 0;
    std::array<std::int64_t, kMaxSolverOrder> place_{};
    std::vector<Vertex> sources_;
    std::vector<Vertex> bottom_up_;
    std::vector<std::vector<Vertex>> steps_;
    std::vector<std::vector<Vertex>> trees_;
    detail::CountsSet dead_;
    detail::CountsSet known_solvable_;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
};

/// True iff some sequence of steps puts t pebbles on r.
inline bool is_solvable(const Graph& g, const Configuration& f, Vertex r, int t = 1) {
    check_configuration(g, f);
    RootedSolver solver(g, r, t);
    return solver.solvable(f);
}

/// Like is_solvable, returning a replayable move sequence on success.
inline std::optional<MoveSequence> solve(const Graph& g, const Configuration& f, Vertex r, int t = 1) {
    check_configuration(g, f);
    RootedSolver solver(g, r, t);
    return solver.solve(f);
}

/// Solvable for every target (t = 1).
inline bool is_solvable_all_targets(const Graph& g, const Configuration& f) {
    check_configuration(g, f);
    if (f.weight() == 0) return false;
    for (Vertex r = 0; r < g.order(); ++r)
        if (!is_solvable(g, f, r, 1)) return false;
    return true;
}

enum class PotentialVerdict { proven_unsolvable, inconclusive };

/// sum f(v) 2^-dist(v,r) as the exact fraction numerator / denominator.
struct PotentialTest {
    PotentialVerdict verdict = PotentialVerdict::inconclusive;
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;
};

/// Sound but incomplete: a potential below 1 cannot reach r.
inline PotentialTest unsolvability_potential_test(const Graph& g, const Configuration& f, Vertex r) {
    check_configuration(g, f);
    RootedSolver solver(g, r, 1);
    PotentialTest out;
    out.numerator = solver.potential(f);
    out.denominator = std::int64_t{1} << solver.potential_scale_exponent();
    while (out.denominator > 1 && out.numerator % 2 == 0) {
        out.numerator /= 2;
        out.denominator /= 2;
    }
    out.verdict = out.numerator < out.denominator ? PotentialVerdict::proven_unsolvable : PotentialVerdict::inconclusive;
    return out;
}

/// A solution using only r-greedy (or r-semigreedy) steps, if one exists.
inline std::optional<MoveSequence> greedy_solution(const Graph& g, const Configuration& f, Vertex r,
                                                   bool semigreedy = false) {
    check_configuration(g, f);
    RootedSolver solver(g, r, 1, semigreedy ? MovePolicy::semigreedy : MovePolicy::greedy);
    return solver.solve(f);
}

class OracleLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reference answer: plain breadth-first enumeration of every reachable
/// configuration with no pruning at all. Test-only.
inline bool is_solvable_oracle(const Graph& g, const Configuration& f, Vertex r, int t = 1,
                               std::size_t state_limit = 2'000'000) {
    check_configuration(g, f);
    if (!g.contains(r)) throw GraphError("target vertex out of range");
    std::unordered_set<std::string> seen;
    std::deque<std::vector<int>> queue;
    auto key = [](const std::vector<int>& counts) {
        std::string k;
        for (int c : counts) k += std::to_string(c) + ",";
        return k;
    };
    queue.push_back(f.counts());
    seen.insert(key(f.counts()));
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.front());
        queue.pop_front();
        if (cur[static_cast<std::size_t>(r)] >= t) return true;
        for (Vertex u = 0; u < g.order(); ++u) {
            if (cur[static_cast<std::size_t>(u)] < 2) continue;
            for (Vertex v : g.neighbors(u)) {
                std::vector<int> next = cur;
                next[static_cast<std::size_t>(u)] -= 2;
                next[static_cast<std::size_t>(v)] += 1;
                if (seen.insert(key(next)).second) {
                    if (seen.size() > state_limit) throw OracleLimitExceeded("oracle state limit exceeded");
                    queue.push_back(std::move(next));
                }
            }
        }
    }
    return false;
}

}  // namespace pebbling

#endif  // PEBBLING_SOLVER_HPP
