#ifndef PEBBLING_PATH_PARTITION_HPP
#define PEBBLING_PATH_PARTITION_HPP

#include <algorithm>
#include <vector>

#include "pebbling/formulas.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Edge partition of a tree into paths, longest first. Every path through
/// the root ends there, and paths[0] starts at the root.
struct PathPartition {
    Vertex root = 0;
    std::vector<int> lengths;                // edge counts, non-increasing
    std::vector<std::vector<Vertex>> paths;  // vertex sequences, same order
};

/// Lexicographic comparison of non-increasing length lists: true when `a`
/// majorizes `b` or equals it.
inline bool majorizes_or_equal(const std::vector<int>& a, const std::vector<int>& b) {
    return !std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Maximum r-path partition: each vertex continues its path into the child
/// with the tallest subtree (lowest id on ties) and every other child starts
/// a new path at it.
inline PathPartition max_r_path_partition(const Graph& tree, Vertex r) {
    if (!tree.contains(r)) throw GraphError("root out of range");
    if (!is_connected(tree)) throw GraphError("path partition needs a connected tree");
    if (tree.edge_count() + 1 != static_cast<std::size_t>(tree.order()))
        throw GraphError("path partition needs a tree; the input has a cycle");

    const auto n = static_cast<std::size_t>(tree.order());
    std::vector<Vertex> parent(n, -1), order{r};
    order.reserve(n);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : tree.neighbors(order[i]))
            if (w != r && parent[static_cast<std::size_t>(w)] == -1 && w != parent[static_cast<std::size_t>(order[i])]) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    std::vector<int> height(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != r) {
            auto& h = height[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])];
            h = std::max(h, height[static_cast<std::size_t>(*it)] + 1);
        }
    auto children = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : tree.neighbors(v))
            if (w != parent[static_cast<std::size_t>(v)]) out.push_back(w);
        std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
            return height[static_cast<std::size_t>(a)] > height[static_cast<std::size_t>(b)];
        });
        return out;
    };

    PathPartition out;
    out.root = r;
    std::vector<std::vector<Vertex>> paths;
    // (start vertex, first child) pairs waiting to be expanded.
    std::vector<std::pair<Vertex, Vertex>> pending;
    for (Vertex c : children(r)) pending.emplace_back(r, c);
    for (std::size_t i = 0; i < pending.size(); ++i) {
        std::vector<Vertex> path{pending[i].first};
        for (Vertex v = pending[i].second;;) {
            path.push_back(v);
            auto kids = children(v);
            if (kids.empty()) break;
            for (std::size_t k = 1; k < kids.size(); ++k) pending.emplace_back(v, kids[k]);
            v = kids.front();
        }
        paths.push_back(std::move(path));
    }
    std::stable_sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (auto& p : paths) out.lengths.push_back(static_cast<int>(p.size()) - 1);
    out.paths = std::move(paths);
    return out;
}

/// pi_t(T, r) = t 2^l1 + sum_{i>=2} 2^li - m + 1 over the maximum r-path partition.
inline BoundValue tree_pi(const Graph& tree, Vertex r, int t = 1) {
    if (t < 1) throw FormulaDomainError("tree_pi needs t >= 1");
    PathPartition p = max_r_path_partition(tree, r);
    if (p.lengths.empty()) return {t, BoundKind::exact, "tree-path-partition"};
    std::int64_t total = detail::checked_mul(t, detail::pow2(p.lengths.front()));
    for (std::size_t i = 1; i < p.lengths.size(); ++i) total = detail::checked_add(total, detail::pow2(p.lengths[i]));
    total = total - static_cast<std::int64_t>(p.lengths.size()) + 1;
    return {total, BoundKind::exact, "tree-path-partition"};
}

/// pi(T): the rooted formula at its best root.
inline BoundValue tree_pi_global(const Graph& tree) {
    BoundValue best{0, BoundKind::exact, "tree-path-partition"};
    for (Vertex r = 0; r < tree.order(); ++r) best.value = std::max(best.value, tree_pi(tree, r, 1).value);
    return best;
}

}  // namespace pebbling

#endif  // PEBBLING_PATH_PARTITION_HPP
