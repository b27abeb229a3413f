#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "pebbling/families.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_io.hpp"
#include "support/graph_enum.hpp"

using namespace pebbling;
using pebbling::testing::isomorphic;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) count += line.find(needle) != std::string::npos;
    return count;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndParallelEdges) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), GraphError);
    EXPECT_THROW(g.add_edge(2, 2), GraphError);
    EXPECT_THROW(g.add_edge(0, 3), GraphError);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
    Graph g = make_friendship(3, 4);
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
        for (Vertex w : nb) EXPECT_TRUE(g.has_edge(w, v));
    }
}

TEST(Families, Cycles) {
    EXPECT_EQ(make_cycle(3).edge_count(), 3u);
    EXPECT_EQ(diameter(make_cycle(4)), 2);
    EXPECT_EQ(diameter(make_cycle(6)), 3);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(eccentricity(make_cycle(6), v), 3);
    EXPECT_THROW(make_cycle(2), GraphError);
}

TEST(Families, PathsCompleteHypercubes) {
    Graph q3 = make_hypercube(3);
    EXPECT_EQ(q3.order(), 8);
    EXPECT_EQ(q3.edge_count(), 12u);
    EXPECT_EQ(diameter(q3), 3);
    for (Vertex v = 0; v < 8; ++v)
        for (Vertex w : q3.neighbors(v)) EXPECT_EQ(__builtin_popcount(static_cast<unsigned>(v ^ w)), 1);
    Graph p4 = make_path(4);
    EXPECT_EQ(p4.order(), 4);
    EXPECT_EQ(p4.edge_count(), 3u);
    EXPECT_TRUE(isomorphic(make_complete(3), make_cycle(3)));
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(diameter(make_path(n)), n - 1);
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(diameter(make_hypercube(d)), d);
    EXPECT_THROW(make_path(0), GraphError);
    EXPECT_THROW(make_complete(0), GraphError);
    EXPECT_THROW(make_hypercube(0), GraphError);
}

TEST(Families, PointAttach) {
    Graph f23 = point_attach(make_cycle(3), 0, make_cycle(3), 0);
    EXPECT_EQ(f23.order(), 5);
    EXPECT_EQ(f23.label(0), "cut");
    EXPECT_TRUE(isomorphic(f23, make_friendship(2, 3)));
    EXPECT_EQ(point_attach(make_cycle(4), 0, make_cycle(4), 0).order(), 7);
    Graph k1(1);
    Graph same = point_attach(make_cycle(5), 2, k1, 0);
    EXPECT_TRUE(isomorphic(same, make_cycle(5)));
    EXPECT_THROW(point_attach(make_cycle(3), 3, make_cycle(3), 0), GraphError);
}

TEST(Families, PolymerShapes) {
    std::vector<Graph> cycles(3, make_cycle(4));
    Graph bouquet = compose_polymer(PolymerSpec::bouquet(cycles, {1, 0, 2}));
    EXPECT_TRUE(isomorphic(bouquet, make_friendship(3, 4)));
    EXPECT_EQ(bouquet.order(), 3 * 4 - 2);

    Graph chain = compose_polymer(PolymerSpec::chain({make_cycle(4), make_cycle(4), make_cycle(4)}, {{2, 0}, {2, 0}}));
    EXPECT_EQ(chain.order(), 10);
    EXPECT_EQ(diameter(chain), 6);
    EXPECT_TRUE(chain.same_structure(make_square_chain(3, SquareKind::para)));

    Graph link = compose_polymer(PolymerSpec::link({make_cycle(4), make_cycle(4)}, {{2, 0}}));
    EXPECT_EQ(link.order(), 8);
    EXPECT_EQ(link.edge_count(), 9u);
    EXPECT_EQ(diameter(link), 5);
}

TEST(Families, PolymerOrderFormula) {
    std::vector<Graph> monomers{make_cycle(3), make_path(3), make_complete(4), make_cycle(4)};
    PolymerSpec spec{monomers, {{0, 1, 1, 0}, {1, 2, 2, 3}, {0, 2, 3, 1}}, PolymerShape::general};
    Graph g = compose_polymer(spec);
    EXPECT_EQ(g.order(), 3 + 3 + 4 + 4 - 3);
    EXPECT_TRUE(is_connected(g));
}

TEST(Families, PolymerRejectsBadInstructions) {
    std::vector<Graph> three(3, make_cycle(3));
    PolymerSpec cyclic{three, {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 1}}, PolymerShape::general};
    EXPECT_THROW(compose_polymer(cyclic), GraphError);
    PolymerSpec missing{three, {{0, 0, 1, 0}}, PolymerShape::general};
    EXPECT_THROW(compose_polymer(missing), GraphError);
    PolymerSpec repeated{three, {{0, 0, 1, 0}, {1, 0, 0, 1}}, PolymerShape::general};
    EXPECT_THROW(compose_polymer(repeated), GraphError);
    PolymerSpec out_of_range{three, {{0, 0, 1, 0}, {1, 1, 2, 7}}, PolymerShape::general};
    EXPECT_THROW(compose_polymer(out_of_range), GraphError);
}

TEST(Families, Friendship) {
    Graph f23 = make_friendship(2, 3);
    EXPECT_EQ(f23.order(), 5);
    EXPECT_EQ(f23.edge_count(), 6u);
    EXPECT_EQ(f23.label(0), "hub");
    EXPECT_EQ(eccentricity(f23, 0), 1);
    EXPECT_EQ(make_friendship(4, 3).order(), 9);
    EXPECT_EQ(make_friendship(2, 4).order(), 7);
    for (int n = 1; n <= 4; ++n)
        for (int m = 3; m <= 6; ++m) EXPECT_EQ(make_friendship(n, m).order(), n * (m - 1) + 1);
    EXPECT_THROW(make_friendship(0, 3), GraphError);
    EXPECT_THROW(make_friendship(2, 2), GraphError);
}

TEST(Families, TriangularChains) {
    EXPECT_TRUE(isomorphic(make_triangular_chain(1), make_cycle(3)));
    Graph t4 = make_triangular_chain(4);
    EXPECT_EQ(t4.order(), 9);
    EXPECT_EQ(t4.edge_count(), 12u);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(make_triangular_chain(n).order(), 2 * n + 1);
    Graph t2e = make_triangular_chain(2, true);
    EXPECT_EQ(t2e.order(), 6);
    EXPECT_EQ(diameter(t2e), 3);
    EXPECT_EQ(t2e.label(5), "pendant");
    EXPECT_TRUE(t2e.has_edge(4, 5));
    EXPECT_THROW(make_triangular_chain(0), GraphError);
}

TEST(Families, SquareChains) {
    EXPECT_TRUE(isomorphic(make_square_chain(1, SquareKind::para), make_cycle(4)));
    Graph f24 = make_friendship(2, 4);
    EXPECT_TRUE(isomorphic(make_square_chain(2, SquareKind::para), f24));
    EXPECT_TRUE(isomorphic(make_square_chain(2, SquareKind::ortho), f24));
    EXPECT_TRUE(isomorphic(make_square_chain(2, SquareKind::para), make_square_chain(2, SquareKind::ortho)));
    Graph q4e = make_square_chain(4, SquareKind::para, true);
    EXPECT_EQ(q4e.order(), 14);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(make_square_chain(n, SquareKind::para).order(), 3 * n + 1);
        EXPECT_EQ(make_square_chain(n, SquareKind::ortho).order(), 3 * n + 1);
        EXPECT_EQ(make_square_chain(n, SquareKind::para, false, true).order(), 4 * n);
        EXPECT_EQ(diameter(make_square_chain(n, SquareKind::para)), 2 * n);
        EXPECT_EQ(eccentricity(make_square_chain(n, SquareKind::para), 0), 2 * n);
    }
    // Internal ortho squares have adjacent cut vertices, para squares opposite ones.
    Graph o3 = make_square_chain(3, SquareKind::ortho);
    EXPECT_TRUE(o3.has_edge(2, 4));
    EXPECT_EQ(distances(make_square_chain(3, SquareKind::para), 2)[5], 2);
    EXPECT_EQ(diameter(o3), 5);
    EXPECT_THROW(make_square_chain(0, SquareKind::para), GraphError);
}

TEST(Families, SquareChainDistanceByHand) {
    // Q_2 far corner: distances to every vertex of the 7-vertex chain.
    Graph q2 = make_square_chain(2, SquareKind::para);
    const Vertex far = square_chain_far_vertex(2);
    EXPECT_EQ(far, 5);
    EXPECT_EQ(eccentricity(q2, far), 4);
    EXPECT_EQ(distances(q2, far), (std::vector<int>{4, 3, 2, 3, 1, 0, 1}));
}

TEST(Families, Corona) {
    EXPECT_TRUE(isomorphic(make_corona(make_complete(2), make_complete(1)), make_path(4)));
    Graph k3k2 = make_corona(make_complete(3), make_complete(2));
    EXPECT_EQ(k3k2.order(), 9);
    EXPECT_TRUE(isomorphic(k3k2, make_qnm(3, 3)));
    EXPECT_THROW(make_corona(make_complete(3), Graph(0)), GraphError);
    EXPECT_THROW(make_corona(Graph(0), make_complete(3)), GraphError);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_TRUE(k3k2.has_edge(i, 3 + 2 * i + j));
}

TEST(Families, Qnm) {
    EXPECT_EQ(make_qnm(3, 3).order(), 9);
    EXPECT_EQ(make_qnm(3, 4).order(), 12);
    EXPECT_TRUE(isomorphic(make_qnm(2, 2), make_path(4)));
    EXPECT_TRUE(isomorphic(make_qnm(2, 2), make_corona(make_complete(2), make_complete(1))));
    EXPECT_THROW(make_qnm(1, 3), GraphError);
    EXPECT_THROW(make_qnm(3, 1), GraphError);
}

TEST(Families, Deterministic) {
    EXPECT_EQ(make_square_chain(4, SquareKind::ortho, true), make_square_chain(4, SquareKind::ortho, true));
    EXPECT_EQ(export_graph(make_friendship(3, 5)), export_graph(make_friendship(3, 5)));
}

TEST(GraphIo, CanonicalTriangleJson) {
    Graph c3 = make_cycle(3);
    EXPECT_EQ(export_graph(c3), R"({"order":3,"edges":[[0,1],[1,2],[0,2]]})");
}

TEST(GraphIo, JsonRoundTrip) {
    for (const Graph& g : {make_friendship(3, 4), make_square_chain(3, SquareKind::ortho, true),
                           make_qnm(3, 3), make_hypercube(3), Graph(1)}) {
        const std::string text = export_graph(g);
        Graph back = import_graph(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(export_graph(back), text);
    }
}

TEST(GraphIo, DotRoundTrip) {
    Graph f23 = make_friendship(2, 3);
    const std::string dot = export_graph(f23, GraphFormat::dot);
    EXPECT_EQ(count_lines_with(dot, "--"), 6);
    EXPECT_NE(dot.find("hub"), std::string::npos);
    EXPECT_EQ(import_graph(dot, GraphFormat::dot), f23);
}

TEST(GraphIo, MalformedInputReportsPosition) {
    try {
        import_graph(R"({"order":3,"edges":[[0,1],)");
        FAIL() << "expected a parse error";
    } catch (const GraphFormatError& e) {
        EXPECT_GT(e.position(), 20u);
    }
    EXPECT_THROW(import_graph(R"({"order":2,"edges":[[0,5]]})"), GraphError);
    EXPECT_THROW(import_graph(R"({"edges":[]})"), GraphFormatError);
    try {
        import_graph("graph G {\n  0 -- 1;\n  what is this\n}\n", GraphFormat::dot);
        FAIL() << "expected a parse error";
    } catch (const GraphFormatError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(GraphIo, PolymerSpecJson) {
    const Json doc = Json::parse(R"({"shape":"chain","monomers":["C4","C4","C4"],
                                     "attachments":[[0,2,1,0],[1,2,2,0]]})");
    Graph g = compose_polymer(polymer_spec_from_json(doc));
    EXPECT_TRUE(g.same_structure(make_square_chain(3, SquareKind::para)));
    EXPECT_THROW(polymer_spec_from_json(Json::parse(R"({"monomers":["X9"]})")), GraphFormatError);
}

TEST(GraphIo, FingerprintIsStable) {
    EXPECT_EQ(graph_fingerprint(make_cycle(5)), graph_fingerprint(make_cycle(5)));
    EXPECT_NE(graph_fingerprint(make_cycle(5)), graph_fingerprint(make_path(5)));
    EXPECT_EQ(graph_fingerprint(make_cycle(5)).size(), 16u);
}

TEST(GraphEnumeration, KnownCounts) {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(pebbling::testing::connected_graphs(n).size(), expected[static_cast<std::size_t>(n - 1)]);
}
