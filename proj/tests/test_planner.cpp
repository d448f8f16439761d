#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>

#include "support.hpp"

using namespace graphconf;
using testing_support::share;

namespace {

// Plain BFS over token moves, independent of the cube complex.
std::optional<std::size_t> bfs_distance(const ColoredGraph& g, Configuration s, const Configuration& t) {
    std::map<Configuration, std::size_t> seen{{s, 0}};
    std::deque<Configuration> q{s};
    while (!q.empty()) {
        auto c = q.front();
        q.pop_front();
        if (c == t) return seen[c];
        for (std::size_t i = 0; i < c.size(); ++i)
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                const auto [a, b] = g.edge(e);
                if (c[i] != a && c[i] != b) continue;
                auto next = c;
                next[i] = c[i] == a ? b : a;
                bool ok = true;
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != i && g.color_class(c[j]) == g.color_class(next[i])) ok = false;
                if (ok && seen.emplace(next, seen[c] + 1).second) q.push_back(next);
            }
    }
    return std::nullopt;
}

} // namespace

TEST(LegalMoves, K5) {
    const auto moves = legal_moves(complete_graph(5), {0, 1});
    EXPECT_EQ(moves.size(), 6u);
    for (const auto& m : moves) {
        EXPECT_NE(m.result[0], m.result[1]);
        const auto back = legal_moves(complete_graph(5), m.result);
        EXPECT_TRUE(std::any_of(back.begin(), back.end(), [](const LegalMove& l) { return l.result == Configuration{0, 1}; }));
    }
    EXPECT_TRUE(legal_moves(complete_graph(2), {0, 1}).empty());
}

TEST(LegalMoves, ColorsBlockMoves) {
    const auto h = testing_support::colored_hexagon();
    // token at 0 (A) may not enter 5 (C) while the other token sits on 2 (C)
    for (const auto& m : legal_moves(h, {0, 2})) EXPECT_NE(m.result, (Configuration{5, 2}));
    EXPECT_THROW(legal_moves(h, {0, 3}), InvalidArgument);
    EXPECT_THROW(legal_moves(h, {0, 9}), InvalidArgument);
}

TEST(LegalMoves, AgreeWithSkeleton) {
    for (const auto& [name, g] : testing_support::battery())
        for (bool ordered : {true, false}) {
            const auto space = build_space(g, 2, ordered, {});
            for (CellIndex v = 0; v < space.cell_count(0); ++v)
                EXPECT_NO_THROW(legal_moves(space, configuration_of(space, v))) << name;
        }
}

TEST(ShortestPath, StarSwap) {
    const auto plan = shortest_path(share(star_graph(3)), 2, {1, 2}, {2, 1});
    ASSERT_TRUE(plan.has_value());
    EXPECT_EQ(plan->length(), 6u);
    EXPECT_EQ(plan->configurations.front(), (Configuration{1, 2}));
    EXPECT_EQ(plan->configurations.back(), (Configuration{2, 1}));
    EXPECT_EQ(replay(star_graph(3), {1, 2}, *plan), (Configuration{2, 1}));
}

TEST(ShortestPath, OracleDistances) {
    // frozen from tests/oracles/config_oracle.py
    EXPECT_EQ(shortest_path(share(complete_graph(5)), 2, {0, 1}, {1, 0})->length(), 3u);
    EXPECT_EQ(shortest_path(share(complete_bipartite_graph(3, 3)), 2, {0, 3}, {3, 0})->length(), 4u);
    EXPECT_FALSE(shortest_path(share(testing_support::colored_hexagon()), 2, {0, 1}, {1, 0}).has_value());
}

TEST(ShortestPath, TrivialAndInvalid) {
    const auto g = share(complete_graph(4));
    const auto plan = shortest_path(g, 2, {0, 1}, {0, 1});
    ASSERT_TRUE(plan.has_value());
    EXPECT_EQ(plan->length(), 0u);
    EXPECT_EQ(plan->configurations.size(), 1u);
    EXPECT_THROW(shortest_path(g, 2, {0}, {0, 1}), InvalidArgument);
    EXPECT_THROW(shortest_path(g, 2, {0, 0}, {0, 1}), InvalidArgument);
}

TEST(ShortestPath, MatchesIndependentBfs) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto g = share(random_colored_graph(rng, {3, 7, 12}));
        const auto space = build_ordered(g, 2);
        if (space.cell_count(0) < 2) continue;
        const auto s = configuration_of(space, 0);
        for (CellIndex v = 0; v < space.cell_count(0); v += 3) {
            const auto t = configuration_of(space, v);
            const auto plan = shortest_path(space, s, t);
            const auto expect = bfs_distance(*g, s, t);
            ASSERT_EQ(plan.has_value(), expect.has_value());
            if (!plan) continue;
            EXPECT_EQ(plan->length(), *expect);
            EXPECT_EQ(replay(*g, s, *plan), t);
        }
    }
}

TEST(ShortestPath, MetricProperties) {
    const auto g = share(complete_bipartite_graph(3, 3));
    const auto ordered = build_ordered(g, 2);
    const auto unordered = build_unordered(g, 2);
    const auto n = ordered.cell_count(0);
    for (CellIndex a = 0; a < n; a += 5)
        for (CellIndex b = 0; b < n; b += 7) {
            const auto ca = configuration_of(ordered, a), cb = configuration_of(ordered, b);
            const auto ab = shortest_path(ordered, ca, cb)->length();
            EXPECT_EQ(ab, shortest_path(ordered, cb, ca)->length());
            EXPECT_LE(shortest_path(unordered, ca, cb)->length(), ab);
            const auto sim = shortest_path(ordered, ca, cb, true);
            EXPECT_LE(sim->length(), ab);
            EXPECT_EQ(replay(*g, ca, *sim), cb);
            for (CellIndex c = 0; c < n; c += 11) {
                const auto cc = configuration_of(ordered, c);
                EXPECT_LE(ab, shortest_path(ordered, ca, cc)->length() + shortest_path(ordered, cc, cb)->length());
            }
        }
}

TEST(ShortestPath, SimultaneousStepsCrossSquares) {
    const auto g = share(complete_graph(5));
    const auto plan = shortest_path(g, 2, {0, 1}, {2, 3}, true, true);
    ASSERT_TRUE(plan.has_value());
    EXPECT_EQ(plan->length(), 1u);
    EXPECT_EQ(plan->move_count(), 2u);
    EXPECT_EQ(replay(*g, {0, 1}, *plan), (Configuration{2, 3}));
}

TEST(ShortestPath, UnorderedReplay) {
    const auto g = share(cycle_graph(6));
    const auto space = build_unordered(g, 3);
    const auto plan = shortest_path(space, {0, 2, 4}, {1, 3, 5}, true);
    ASSERT_TRUE(plan.has_value());
    EXPECT_EQ(replay(*g, {0, 2, 4}, *plan, false), (Configuration{1, 3, 5}));
    const auto single = shortest_path(space, {4, 0, 2}, {5, 1, 3});
    ASSERT_TRUE(single.has_value());
    EXPECT_EQ(replay(*g, {0, 2, 4}, *single, false), (Configuration{1, 3, 5}));
}

TEST(Replay, RejectsIllegalPlans) {
    Plan bad;
    bad.steps = {{Move{0, 0, 2, 0}}};
    EXPECT_THROW(replay(complete_graph(3), {0, 1}, bad), Error);
}
