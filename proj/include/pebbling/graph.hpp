#ifndef PEBBLING_GRAPH_HPP
#define PEBBLING_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pebbling {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Edges are kept in insertion order (normalized so that first < second) so
/// that serialization is byte-stable; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order) {
        if (order < 0) throw GraphError("graph order must be nonnegative");
        adjacency_.resize(static_cast<std::size_t>(order));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(check(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    bool has_edge(Vertex u, Vertex v) const {
        if (!contains(u) || !contains(v)) return false;
        const auto& adj = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
        insert_sorted(adjacency_[static_cast<std::size_t>(u)], v);
        insert_sorted(adjacency_[static_cast<std::size_t>(v)], u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    Vertex add_vertex() {
        adjacency_.emplace_back();
        return order() - 1;
    }

    const std::map<Vertex, std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const {
        auto it = labels_.find(v);
        return it == labels_.end() ? std::string{} : it->second;
    }
    void set_label(Vertex v, std::string tag) {
        check(v);
        if (tag.empty())
            labels_.erase(v);
        else
            labels_[v] = std::move(tag);
    }

    /// Same vertex set and edge set (insertion order and labels ignored).
    bool same_structure(const Graph& other) const { return adjacency_ == other.adjacency_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::size_t check(Vertex v) const {
        if (!contains(v))
            throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                             std::to_string(order()));
        return static_cast<std::size_t>(v);
    }
    static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
        list.insert(std::upper_bound(list.begin(), list.end(), v), v);
    }

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::map<Vertex, std::string> labels_;
};

inline constexpr int kUnreachable = -1;

/// Breadth-first hop distances from `source`; unreachable vertices get kUnreachable.
inline std::vector<int> distances(const Graph& g, Vertex source) {
    if (!g.contains(source)) throw GraphError("source vertex out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

inline int eccentricity(const Graph& g, Vertex v) {
    auto dist = distances(g, v);
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end())
        throw GraphError("eccentricity requires a connected graph");
    return *std::max_element(dist.begin(), dist.end());
}

inline int diameter(const Graph& g) {
    if (g.order() == 0) throw GraphError("diameter of the empty graph");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

/// All-pairs hop distances, row per source.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) rows.push_back(distances(g, v));
    return rows;
}

}  // namespace pebbling

#endif  // PEBBLING_GRAPH_HPP
