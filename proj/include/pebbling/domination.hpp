#ifndef PEBBLING_DOMINATION_HPP
#define PEBBLING_DOMINATION_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

inline constexpr int kMaxDominationOrder = 16;

namespace detail {

using VertexMask = std::uint32_t;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

struct NeighborhoodMasks {
    std::vector<VertexMask> open;    // N(v)
    std::vector<VertexMask> closed;  // N[v]
    VertexMask all = 0;
};

inline NeighborhoodMasks neighborhood_masks(const Graph& g) {
    if (g.order() > kMaxDominationOrder)
        throw std::invalid_argument("domination search is limited to order " + std::to_string(kMaxDominationOrder));
    NeighborhoodMasks m;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexMask open = 0;
        for (Vertex w : g.neighbors(v)) open |= bit(w);
        m.open.push_back(open);
        m.closed.push_back(open | bit(v));
        m.all |= bit(v);
    }
    return m;
}

inline VertexMask union_of(const std::vector<VertexMask>& masks, VertexMask set) {
    VertexMask out = 0;
    for (Vertex v = 0; set; ++v, set >>= 1)
        if (set & 1u) out |= masks[static_cast<std::size_t>(v)];
    return out;
}

}  // namespace detail

/// gamma_t(G): the least |S| with every vertex adjacent to a member of S.
inline int total_domination_number(const Graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("total domination needs a connected graph with at least two vertices");
    const auto m = detail::neighborhood_masks(g);
    const auto n = static_cast<unsigned>(g.order());
    int best = g.order();
    for (detail::VertexMask s = 1; s < (detail::VertexMask{1} << n); ++s) {
        const int size = __builtin_popcount(s);
        if (size < best && detail::union_of(m.open, s) == m.all) best = size;
    }
    return best;
}

/// The pi*_2 = 5 criterion: gamma_t >= 4, no pair {u, v} together with
/// N(u) & N(v) dominates, and some triple satisfies one of the three
/// covering conditions.
inline bool pi_star2_eq5_characterization(const Graph& g) {
    if (total_domination_number(g) < 4) return false;
    const auto m = detail::neighborhood_masks(g);
    const Vertex n = g.order();
    auto dominates = [&](detail::VertexMask s) { return detail::union_of(m.closed, s) == m.all; };
    auto nb = [&](Vertex v) { return m.open[static_cast<std::size_t>(v)]; };
    using detail::bit;

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (dominates(bit(u) | bit(v) | (nb(u) & nb(v)))) return false;

    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            const detail::VertexMask common = nb(u) & nb(v);
            const detail::VertexMask around_common = detail::union_of(m.open, common);
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                const detail::VertexMask base = bit(u) | bit(v) | bit(w) | common;
                if ((common & bit(w)) && dominates(base | (nb(u) & nb(w)) | (nb(v) & nb(w)))) return true;
                if ((nb(v) & bit(w)) && dominates(base | (nb(u) & nb(w)))) return true;
                if ((around_common & bit(w)) && dominates(base)) return true;
            }
        }
    return false;
}

}  // namespace pebbling

#endif  // PEBBLING_DOMINATION_HPP
