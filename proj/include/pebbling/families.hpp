#ifndef PEBBLING_FAMILIES_HPP
#define PEBBLING_FAMILIES_HPP

#include <numeric>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

// ---------------------------------------------------------------------------
// Elementary families
// ---------------------------------------------------------------------------

inline Graph make_cycle(int m) {
    if (m < 3) throw GraphError("cycle needs at least 3 vertices, got " + std::to_string(m));
    Graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

inline Graph make_path(int n) {
    if (n < 1) throw GraphError("path needs at least 1 vertex, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_complete(int n) {
    if (n < 1) throw GraphError("complete graph needs at least 1 vertex, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

/// Vertex ids are the binary d-tuples read as integers.
inline Graph make_hypercube(int d) {
    if (d < 1 || d > 20) throw GraphError("hypercube dimension must be in [1, 20], got " + std::to_string(d));
    Graph g(1 << d);
    for (int v = 0; v < (1 << d); ++v)
        for (int k = 0; k < d; ++k) {
            int w = v ^ (1 << k);
            if (v < w) g.add_edge(v, w);
        }
    return g;
}

// ---------------------------------------------------------------------------
// Polymers
// ---------------------------------------------------------------------------

enum class PolymerShape { general, chain, link, bouquet };

inline std::string to_string(PolymerShape shape) {
    switch (shape) {
        case PolymerShape::general: return "general";
        case PolymerShape::chain: return "chain";
        case PolymerShape::link: return "link";
        case PolymerShape::bouquet: return "bouquet";
    }
    return "general";
}

inline PolymerShape polymer_shape_from_string(const std::string& name) {
    if (name == "general") return PolymerShape::general;
    if (name == "chain") return PolymerShape::chain;
    if (name == "link") return PolymerShape::link;
    if (name == "bouquet") return PolymerShape::bouquet;
    throw GraphError("unknown polymer shape '" + name + "'");
}

/// Identify vertex_a of monomer_a with vertex_b of monomer_b. For the link
/// shape the pair is joined by a bridge edge instead.
struct Attachment {
    int monomer_a = 0;
    Vertex vertex_a = 0;
    int monomer_b = 0;
    Vertex vertex_b = 0;
    friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct PolymerSpec {
    std::vector<Graph> monomers;
    std::vector<Attachment> attachments;
    PolymerShape shape = PolymerShape::general;

    /// nodes[i] = (vertex of monomer i, vertex of monomer i+1) that are identified.
    static PolymerSpec chain(std::vector<Graph> units, const std::vector<Edge>& nodes) {
        PolymerSpec spec{std::move(units), {}, PolymerShape::chain};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            spec.attachments.push_back({static_cast<int>(i), nodes[i].first, static_cast<int>(i + 1),
                                        nodes[i].second});
        return spec;
    }

    /// bridges[i] = (u_i in monomer i, v_{i+1} in monomer i+1) joined by an edge.
    static PolymerSpec link(std::vector<Graph> units, const std::vector<Edge>& bridges) {
        PolymerSpec spec = chain(std::move(units), bridges);
        spec.shape = PolymerShape::link;
        return spec;
    }

    /// Every monomer i is glued at nodes[i] onto a single common node.
    static PolymerSpec bouquet(std::vector<Graph> units, const std::vector<Vertex>& nodes) {
        if (nodes.size() != units.size())
            throw GraphError("bouquet needs one node per monomer");
        PolymerSpec spec{std::move(units), {}, PolymerShape::bouquet};
        for (std::size_t i = 1; i < nodes.size(); ++i)
            spec.attachments.push_back({0, nodes[0], static_cast<int>(i), nodes[i]});
        return spec;
    }
};

namespace detail {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // Smaller id becomes the representative.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

}  // namespace detail

/// Builds the polymer described by `spec`.
///
/// Numbering is monomer-major: the vertices of monomer 0 come first, then the
/// not-yet-numbered vertices of monomer 1, and so on. An identified node keeps
/// the lowest id among the vertices merged into it and is labeled "cut".
inline Graph compose_polymer(const PolymerSpec& spec) {
    const int k = static_cast<int>(spec.monomers.size());
    if (k == 0) throw GraphError("polymer needs at least one monomer");
    for (int i = 0; i < k; ++i)
        if (!is_connected(spec.monomers[static_cast<std::size_t>(i)]))
            throw GraphError("monomer " + std::to_string(i) + " is not connected");
    if (static_cast<int>(spec.attachments.size()) != k - 1)
        throw GraphError("polymer of " + std::to_string(k) + " monomers needs " + std::to_string(k - 1) +
                         " attachments, got " + std::to_string(spec.attachments.size()));

    std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i)
        offset[static_cast<std::size_t>(i) + 1] =
            offset[static_cast<std::size_t>(i)] + spec.monomers[static_cast<std::size_t>(i)].order();

    detail::DisjointSets units(k);
    detail::DisjointSets vertices(offset.back());
    for (std::size_t idx = 0; idx < spec.attachments.size(); ++idx) {
        const Attachment& a = spec.attachments[idx];
        const std::string where = "attachment " + std::to_string(idx);
        if (a.monomer_a < 0 || a.monomer_a >= k || a.monomer_b < 0 || a.monomer_b >= k)
            throw GraphError(where + ": monomer index out of range");
        if (!spec.monomers[static_cast<std::size_t>(a.monomer_a)].contains(a.vertex_a) ||
            !spec.monomers[static_cast<std::size_t>(a.monomer_b)].contains(a.vertex_b))
            throw GraphError(where + ": vertex out of range");
        if (spec.shape == PolymerShape::chain && (a.monomer_a != static_cast<int>(idx) ||
                                                  a.monomer_b != static_cast<int>(idx) + 1))
            throw GraphError(where + ": chain attachments must join monomer i to monomer i+1");
        if (spec.shape == PolymerShape::link && (a.monomer_a != static_cast<int>(idx) ||
                                                 a.monomer_b != static_cast<int>(idx) + 1))
            throw GraphError(where + ": link bridges must join monomer i to monomer i+1");
        if (!units.unite(a.monomer_a, a.monomer_b))
            throw GraphError(where + ": attachments form a cycle over the monomers");
        if (spec.shape != PolymerShape::link)
            vertices.unite(offset[static_cast<std::size_t>(a.monomer_a)] + a.vertex_a,
                           offset[static_cast<std::size_t>(a.monomer_b)] + a.vertex_b);
    }

    if (spec.shape == PolymerShape::bouquet && k > 1) {
        const Attachment& first = spec.attachments.front();
        int node = vertices.find(offset[static_cast<std::size_t>(first.monomer_a)] + first.vertex_a);
        for (const Attachment& a : spec.attachments)
            if (vertices.find(offset[static_cast<std::size_t>(a.monomer_b)] + a.vertex_b) != node)
                throw GraphError("bouquet attachments must all meet at one node");
    }

    // Compress representatives into consecutive ids.
    std::vector<Vertex> new_id(static_cast<std::size_t>(offset.back()), -1);
    int next = 0;
    for (int x = 0; x < offset.back(); ++x) {
        int rep = vertices.find(x);
        new_id[static_cast<std::size_t>(x)] = rep == x ? next++ : new_id[static_cast<std::size_t>(rep)];
    }

    Graph out(next);
    for (int i = 0; i < k; ++i) {
        const Graph& unit = spec.monomers[static_cast<std::size_t>(i)];
        const int base = offset[static_cast<std::size_t>(i)];
        for (const auto& [u, v] : unit.edges())
            out.add_edge(new_id[static_cast<std::size_t>(base + u)], new_id[static_cast<std::size_t>(base + v)]);
        for (const auto& [v, tag] : unit.labels()) {
            Vertex mapped = new_id[static_cast<std::size_t>(base + v)];
            if (out.label(mapped).empty()) out.set_label(mapped, tag);
        }
    }
    for (const Attachment& a : spec.attachments) {
        Vertex u = new_id[static_cast<std::size_t>(offset[static_cast<std::size_t>(a.monomer_a)] + a.vertex_a)];
        Vertex v = new_id[static_cast<std::size_t>(offset[static_cast<std::size_t>(a.monomer_b)] + a.vertex_b)];
        if (spec.shape == PolymerShape::link)
            out.add_edge(u, v);
        else
            out.set_label(u, "cut");
    }
    return out;
}

/// Identifies v1 in g1 with v2 in g2; g1 keeps its numbering.
inline Graph point_attach(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    if (!g1.contains(v1) || !g2.contains(v2)) throw GraphError("point_attach: vertex out of range");
    PolymerSpec spec{{g1, g2}, {{0, v1, 1, v2}}, PolymerShape::general};
    return compose_polymer(spec);
}

// ---------------------------------------------------------------------------
// Cactus families
// ---------------------------------------------------------------------------

/// F_{n,m}: n cycles of order m sharing vertex 0 (labeled "hub").
inline Graph make_friendship(int n, int m) {
    if (n < 1) throw GraphError("friendship graph needs at least one cycle");
    if (m < 3) throw GraphError("friendship graph cycles need at least 3 vertices");
    std::vector<Graph> cycles(static_cast<std::size_t>(n), make_cycle(m));
    Graph g = compose_polymer(PolymerSpec::bouquet(std::move(cycles), std::vector<Vertex>(static_cast<std::size_t>(n), 0)));
    g.set_label(0, "hub");
    return g;
}

/// Chain triangular cactus T_n. Triangle k (1-based) occupies vertices
/// {2k-2, 2k-1, 2k}; the cut vertices are 2, 4, ..., 2n-2. With `pendant`
/// an extra vertex 2n+1 hangs off corner 2n, the terminal corner farthest from 0.
inline Graph make_triangular_chain(int n, bool pendant = false) {
    if (n < 1) throw GraphError("triangular chain needs at least one triangle");
    std::vector<Graph> units(static_cast<std::size_t>(n), make_cycle(3));
    Graph g = compose_polymer(PolymerSpec::chain(std::move(units), std::vector<Edge>(static_cast<std::size_t>(n - 1), {2, 0})));
    g.set_label(0, "terminal");
    const Vertex far = 2 * n;
    if (pendant) {
        Vertex p = g.add_vertex();
        g.add_edge(far, p);
        g.set_label(p, "pendant");
    } else {
        g.set_label(far, "terminal");
    }
    return g;
}

enum class SquareKind { para, ortho };

inline std::string to_string(SquareKind kind) { return kind == SquareKind::para ? "para" : "ortho"; }

inline SquareKind square_kind_from_string(const std::string& name) {
    if (name == "para") return SquareKind::para;
    if (name == "ortho") return SquareKind::ortho;
    throw GraphError("unknown square kind '" + name + "' (expected para or ortho)");
}

/// Far terminal of make_square_chain (the vertex the pendant attaches to).
inline Vertex square_chain_far_vertex(int n, bool bridges = false) {
    if (n < 1) throw GraphError("square chain needs at least one square");
    return bridges ? 4 * (n - 1) + 2 : 3 * (n - 1) + 2;
}

/// Square cactus chain built from squares 0-1-2-3-0.
///
/// Square 0 leaves through its local vertex 2 (opposite vertex 0, the chain's
/// terminal). Internal squares enter at local 0 and leave through local 2
/// (para, cut vertices opposite) or local 1 (ortho, cut vertices adjacent).
/// The last square's far vertex is its local 2. With `bridges` consecutive
/// squares are joined by an edge instead of sharing the cut vertex. With
/// `pendant` one extra vertex hangs off the far vertex.
inline Graph make_square_chain(int n, SquareKind kind, bool pendant = false, bool bridges = false) {
    if (n < 1) throw GraphError("square chain needs at least one square");
    std::vector<Graph> units(static_cast<std::size_t>(n), make_cycle(4));
    std::vector<Edge> nodes;
    for (int k = 0; k + 1 < n; ++k) {
        Vertex out = (k == 0 || kind == SquareKind::para) ? 2 : 1;
        nodes.emplace_back(out, 0);
    }
    Graph g = compose_polymer(bridges ? PolymerSpec::link(std::move(units), nodes)
                                      : PolymerSpec::chain(std::move(units), nodes));
    g.set_label(0, "terminal");
    const Vertex far = square_chain_far_vertex(n, bridges);
    if (pendant) {
        Vertex p = g.add_vertex();
        g.add_edge(far, p);
        g.set_label(p, "pendant");
    } else {
        g.set_label(far, "terminal");
    }
    return g;
}

// ---------------------------------------------------------------------------
// Corona products
// ---------------------------------------------------------------------------

/// G o H: vertices of g keep ids 0..|g|-1; copy i of h occupies
/// |g| + i*|h| .. |g| + (i+1)*|h| - 1 and is joined to vertex i.
inline Graph make_corona(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1) throw GraphError("corona product needs nonempty factors");
    const int gn = g.order();
    const int hn = h.order();
    Graph out(gn * (1 + hn));
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (int i = 0; i < gn; ++i) {
        const int base = gn + i * hn;
        for (const auto& [u, v] : h.edges()) out.add_edge(base + u, base + v);
        for (int j = 0; j < hn; ++j) out.add_edge(i, base + j);
    }
    return out;
}

/// Q(n, m): every vertex of K_n identified with a vertex of its own K_m.
inline Graph make_qnm(int n, int m) {
    if (n < 2 || m < 2) throw GraphError("Q(n,m) needs n > 1 and m > 1");
    return make_corona(make_complete(n), make_complete(m - 1));
}

}  // namespace pebbling

#endif  // PEBBLING_FAMILIES_HPP
