#include <gtest/gtest.h>

#include <random>

#include "pebbling/domination.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/invariants.hpp"
#include "pebbling/path_partition.hpp"
#include "support/graph_enum.hpp"
#include "support/oracles.hpp"

using namespace pebbling;

namespace {

Graph spider(const std::vector<int>& legs) {
    int order = 1;
    for (int l : legs) order += l;
    Graph g(order);
    Vertex next = 1;
    for (int l : legs) {
        Vertex prev = 0;
        for (int i = 0; i < l; ++i, ++next) {
            g.add_edge(prev, next);
            prev = next;
        }
    }
    return g;
}

}  // namespace

TEST(Formulas, Cycles) {
    EXPECT_EQ(cycle_pi(6).value, 8);
    EXPECT_EQ(cycle_pi(5).value, 5);
    // m = 7: n = 3, (2^5 + 1)/3 + 2^3 * 2 = 11 + 16.
    EXPECT_EQ(cycle_pi(7, 3).value, 27);
    EXPECT_EQ(cycle_pi(7).value, pebbling_number(make_cycle(7)).value);
    EXPECT_EQ(cycle_pi(6).kind, BoundKind::exact);
    EXPECT_THROW(cycle_pi(2), FormulaDomainError);
    EXPECT_THROW(cycle_pi(5, 0), FormulaDomainError);
}

TEST(Formulas, Friendship) {
    EXPECT_EQ(friendship_even_pi(2, 2).value, 16);
    EXPECT_EQ(friendship_even_pi(3, 2).value, 19);
    EXPECT_EQ(friendship_hub_pi(2, 2).value, 7);
    EXPECT_EQ(friendship3_pi(2).value, 6);
    EXPECT_EQ(friendship3_pi(4).value, 10);
    EXPECT_THROW(friendship3_pi(1), FormulaDomainError);
    EXPECT_THROW(friendship_even_pi(1, 2), FormulaDomainError);
    EXPECT_THROW(friendship_even_pi(2, 1), FormulaDomainError);
    EXPECT_EQ(fn4_suite(2), (Fn4Suite{16, 4, 4}));
    EXPECT_EQ(fn4_suite(3), (Fn4Suite{19, 4, 5}));
    EXPECT_EQ(fn4_suite(5), (Fn4Suite{25, 4, 6}));
    EXPECT_THROW(fn4_suite(1), FormulaDomainError);
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(fn4_suite(n).pi, friendship_even_pi(n, 2).value);
}

TEST(Formulas, Chains) {
    EXPECT_EQ(triangular_chain_pi(1).value, 3);
    EXPECT_EQ(triangular_chain_pi(4).value, 20);
    EXPECT_EQ(triangular_chain_pi(4, true).value, 36);
    EXPECT_EQ(square_chain_pi(2, SquareKind::para).value, 16);
    EXPECT_EQ(square_chain_pi(3, SquareKind::ortho).value, 34);
    EXPECT_EQ(square_chain_pi(1, SquareKind::para, true).value, 8);
    EXPECT_THROW(square_chain_pi(1, SquareKind::ortho), FormulaDomainError);
    EXPECT_THROW(square_chain_pi(0, SquareKind::para), FormulaDomainError);
    EXPECT_THROW(triangular_chain_pi(0), FormulaDomainError);
}

TEST(Formulas, ConsistencyAtTwoSquares) {
    EXPECT_EQ(friendship_even_pi(2, 2).value, 16);
    EXPECT_EQ(square_chain_pi(2, SquareKind::para).value, 16);
    EXPECT_EQ(square_chain_pi(2, SquareKind::ortho).value, 16);
    EXPECT_EQ(fn4_suite(2).pi, 16);
}

TEST(Formulas, Corona) {
    EXPECT_EQ(corona_complete_pi(3, 2), (CoronaValues{14, 4}));
    EXPECT_EQ(qnm_pi(3, 4).pi, 17);
    EXPECT_EQ(corona_complete_pi(3, 1).pi, 11);
    EXPECT_EQ(pebbling_number(make_corona(make_complete(3), make_complete(1))).value, 11);
    EXPECT_THROW(corona_complete_pi(2, 2), FormulaDomainError);
    EXPECT_THROW(qnm_pi(2, 3), FormulaDomainError);
    for (int n = 3; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m) EXPECT_EQ(qnm_pi(n, m).pi, corona_complete_pi(n, m - 1).pi);
}

TEST(Formulas, PolymerBounds) {
    EXPECT_EQ(product_bound({4, 4, 4}).value, 64);
    EXPECT_EQ(product_bound({3}).value, 3);
    EXPECT_EQ(product_bound({4, 4, 4}).kind, BoundKind::upper);
    EXPECT_EQ(link_bound({4, 4}).value, 32);
    EXPECT_EQ(bouquet_bound({4, 4, 4, 4}).value, 22);
    EXPECT_EQ(bouquet_bound({3, 8, 5}).value, 8 * 5 + 2);
    EXPECT_EQ(bouquet_bound({7}).value, 7);
    for (int n = 2; n <= 8; ++n)
        EXPECT_EQ(bouquet_bound(std::vector<std::int64_t>(static_cast<std::size_t>(n), 4)).value, 3 * n + 10);
    EXPECT_THROW(product_bound({}), FormulaDomainError);
    EXPECT_THROW(product_bound({0, 3}), FormulaDomainError);
    EXPECT_THROW(product_bound({1LL << 40, 1LL << 40}), std::overflow_error);
}

TEST(Formulas, LowerBounds) {
    EXPECT_EQ(lower_bounds(make_cycle(6)).value, 8);
    EXPECT_EQ(lower_bounds(make_path(5)).value, 16);
    EXPECT_EQ(lower_bounds(make_complete(4)).value, 4);
    EXPECT_EQ(lower_bounds(make_complete(4)).kind, BoundKind::lower);
}

TEST(PathPartition, Examples) {
    EXPECT_EQ(max_r_path_partition(make_path(4), 0).lengths, (std::vector<int>{3}));
    Graph star = spider({1, 1, 1});
    EXPECT_EQ(max_r_path_partition(star, 1).lengths, (std::vector<int>{2, 1}));
    Graph s322 = spider({3, 2, 2});
    EXPECT_EQ(max_r_path_partition(s322, 3).lengths, (std::vector<int>{5, 2}));
    EXPECT_THROW(max_r_path_partition(make_cycle(4), 0), GraphError);
}

TEST(PathPartition, PathsPartitionTheEdges) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph tree = pebbling::testing::random_tree(2 + static_cast<int>(rng() % 9), rng);
        const Vertex r = static_cast<Vertex>(rng() % static_cast<unsigned>(tree.order()));
        PathPartition p = max_r_path_partition(tree, r);
        ASSERT_FALSE(p.paths.empty());
        EXPECT_EQ(p.paths.front().front(), r);
        EXPECT_TRUE(std::is_sorted(p.lengths.rbegin(), p.lengths.rend()));
        std::set<std::pair<Vertex, Vertex>> seen;
        for (std::size_t i = 0; i < p.paths.size(); ++i) {
            EXPECT_EQ(static_cast<int>(p.paths[i].size()) - 1, p.lengths[i]);
            for (std::size_t k = 0; k < p.paths[i].size(); ++k) {
                if (k > 0 && k + 1 < p.paths[i].size()) {
                    EXPECT_NE(p.paths[i][k], r);
                }
                if (k == 0) continue;
                Vertex a = p.paths[i][k - 1], b = p.paths[i][k];
                EXPECT_TRUE(tree.has_edge(a, b));
                EXPECT_TRUE(seen.insert({std::min(a, b), std::max(a, b)}).second);
            }
        }
        EXPECT_EQ(seen.size(), tree.edge_count());
    }
}

TEST(PathPartition, MajorizesEveryPartition) {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : pebbling::testing::connected_graphs(n)) {
            if (!is_tree(g)) continue;
            for (Vertex r = 0; r < n; ++r) {
                const auto best = max_r_path_partition(g, r).lengths;
                for (const auto& other : pebbling::testing::all_r_path_partitions(g, r))
                    EXPECT_TRUE(majorizes_or_equal(best, other));
            }
        }
}

TEST(PathPartition, SpiderMaximumIsExhaustive) {
    Graph s322 = spider({3, 2, 2});
    const auto all = pebbling::testing::all_r_path_partitions(s322, 3);
    const auto best = *std::max_element(all.begin(), all.end());
    EXPECT_EQ(best, (std::vector<int>{5, 2}));
    EXPECT_EQ(max_r_path_partition(s322, 3).lengths, best);
}

TEST(TreeFormula, Examples) {
    EXPECT_EQ(tree_pi(make_path(4), 0).value, 8);
    Graph star = spider({1, 1, 1});
    EXPECT_EQ(tree_pi(star, 1).value, 5);
    EXPECT_EQ(pebbling::testing::oracle_pi_rooted(star, 1), 5);
    EXPECT_EQ(tree_pi(make_path(3), 0, 2).value, 8);
    EXPECT_EQ(tree_pi(Graph(1), 0, 3).value, 3);
    EXPECT_EQ(tree_pi_global(make_path(5)).value, 16);
    EXPECT_THROW(tree_pi(make_cycle(3), 0), GraphError);
}

TEST(TreeFormula, AgreesWithSolverOnRandomTrees) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        Graph tree = pebbling::testing::random_tree(2 + static_cast<int>(rng() % 7), rng);
        const Vertex r = static_cast<Vertex>(rng() % static_cast<unsigned>(tree.order()));
        for (int t = 1; t <= 2; ++t) EXPECT_EQ(tree_pi(tree, r, t).value, pebbling_number_rooted(tree, r, t).value);
    }
}

TEST(Domination, TotalDominationNumber) {
    EXPECT_EQ(total_domination_number(make_cycle(4)), 2);
    EXPECT_EQ(total_domination_number(make_path(2)), 2);
    EXPECT_EQ(total_domination_number(make_cycle(6)), 4);
    EXPECT_EQ(total_domination_number(make_friendship(3, 4)), 4);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : pebbling::testing::connected_graphs(n))
            EXPECT_EQ(total_domination_number(g), pebbling::testing::oracle_total_domination(g));
    EXPECT_THROW(total_domination_number(Graph(1)), std::invalid_argument);
    EXPECT_THROW(total_domination_number(make_path(17)), std::invalid_argument);
}

TEST(Domination, Characterization) {
    EXPECT_TRUE(pi_star2_eq5_characterization(make_friendship(3, 4)));
    EXPECT_FALSE(pi_star2_eq5_characterization(make_friendship(2, 4)));
    EXPECT_FALSE(pi_star2_eq5_characterization(make_cycle(4)));
    EXPECT_FALSE(pi_star2_eq5_characterization(make_friendship(4, 4)));
}
