#ifndef PEBBLING_TESTS_GRAPH_ENUM_HPP
#define PEBBLING_TESTS_GRAPH_ENUM_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling::testing {

/// Exhaustive isomorphism test by backtracking over degree-compatible
/// vertex maps. Limited to order 10.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 10 || b.order() > 10) throw std::invalid_argument("isomorphism check limited to order 10");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    std::vector<int> da, db;
    for (Vertex v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(Vertex)> extend = [&](Vertex v) {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || da[static_cast<std::size_t>(v)] != db[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u)
                ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(v + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        map[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    return extend(0);
}

namespace detail {

// Isomorphism-invariant key: per vertex its degree, the sorted degrees of
// its neighbours and the number of triangles through it.
inline std::vector<std::int64_t> invariant_key(const Graph& g) {
    std::vector<std::vector<int>> profiles;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> p{g.degree(v)};
        int triangles = 0;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) triangles += g.has_edge(nb[i], nb[j]);
        p.push_back(triangles);
        std::vector<int> nd;
        for (Vertex w : nb) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        p.insert(p.end(), nd.begin(), nd.end());
        profiles.push_back(std::move(p));
    }
    std::sort(profiles.begin(), profiles.end());
    std::vector<std::int64_t> key{g.order(), static_cast<std::int64_t>(g.edge_count())};
    for (const auto& p : profiles) {
        key.push_back(-1);
        key.insert(key.end(), p.begin(), p.end());
    }
    return key;
}

}  // namespace detail

/// All connected graphs of the given order, one per isomorphism class.
/// Every connected graph has a vertex whose removal keeps it connected, so
/// each class arises from a smaller connected graph plus one new vertex.
inline std::vector<Graph> connected_graphs(int order) {
    if (order < 1 || order > 8) throw std::invalid_argument("connected graph enumeration supports orders 1..8");
    std::vector<Graph> level{Graph(1)};
    for (int n = 2; n <= order; ++n) {
        std::map<std::vector<std::int64_t>, std::vector<Graph>> buckets;
        std::vector<Graph> next;
        for (const Graph& base : level)
            for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
                Graph g(n);
                for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
                for (Vertex u = 0; u < n - 1; ++u)
                    if (mask & (1u << u)) g.add_edge(u, n - 1);
                auto& bucket = buckets[detail::invariant_key(g)];
                if (std::none_of(bucket.begin(), bucket.end(), [&](const Graph& h) { return isomorphic(g, h); })) {
                    bucket.push_back(g);
                    next.push_back(g);
                }
            }
        level = std::move(next);
    }
    return level;
}

/// Uniform random labeled tree via a Pruefer sequence.
inline Graph random_tree(int order, std::mt19937& rng) {
    Graph g(order);
    if (order < 2) return g;
    if (order == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, order - 1);
    std::vector<int> seq(static_cast<std::size_t>(order - 2));
    for (auto& s : seq) s = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(order), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    for (int s : seq)
        for (Vertex v = 0; v < order; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1) {
                g.add_edge(v, s);
                --degree[static_cast<std::size_t>(v)];
                --degree[static_cast<std::size_t>(s)];
                break;
            }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < order; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) rest.push_back(v);
    g.add_edge(rest.at(0), rest.at(1));
    return g;
}

}  // namespace pebbling::testing

#endif  // PEBBLING_TESTS_GRAPH_ENUM_HPP
