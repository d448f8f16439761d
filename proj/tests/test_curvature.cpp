#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support.hpp"

using namespace graphconf;

namespace {

std::vector<std::string> words_up_to(int length, int max_stars) {
    std::vector<std::string> out{""};
    for (int i = 0; i < length; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char ch : {'0', '1', '*'}) next.push_back(w + ch);
        out = std::move(next);
    }
    std::erase_if(out, [&](const std::string& w) { return std::count(w.begin(), w.end(), '*') > max_stars; });
    return out;
}

} // namespace

TEST(Triangles, EmptyTriangleAndMissingClique) {
    const auto hollow = SimplicialComplex::closure(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(first_empty_triangle(hollow), (Triangle{0, 1, 2}));
    EXPECT_EQ(first_missing_clique(hollow), (Simplex{0, 1, 2}));
    const auto filled = SimplicialComplex::closure(3, {{0, 1, 2}});
    EXPECT_FALSE(first_empty_triangle(filled).has_value());
    EXPECT_FALSE(first_missing_clique(filled).has_value());
    // boundary of a tetrahedron: every triangle filled, the 4-clique is not
    const auto tet = SimplicialComplex::closure(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    EXPECT_FALSE(first_empty_triangle(tet).has_value());
    EXPECT_EQ(first_missing_clique(tet), (Simplex{0, 1, 2, 3}));
}

TEST(LinkCondition, BatteryPasses) {
    for (const auto& [name, g] : testing_support::battery())
        for (int n = 2; n <= 3; ++n)
            for (bool ordered : {true, false}) {
                const auto space = build_space(g, n, ordered, {});
                const auto growth = check_link_condition(space);
                EXPECT_TRUE(growth.passed) << name << " n=" << n;
                const auto counts = space.cell_counts();
                EXPECT_EQ(growth.cells_checked, std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
                EXPECT_TRUE(check_link_condition(space.complex()).passed) << name << " n=" << n;
                EXPECT_TRUE(check_flag_condition(space).passed) << name << " n=" << n;
                EXPECT_TRUE(check_flag_condition(space, false).passed) << name << " n=" << n;
            }
}

TEST(LinkCondition, K7ThreeTokensPasses) {
    const auto space = build_ordered(complete_graph(7), 3);
    EXPECT_TRUE(check_link_condition(space, 2).passed);
}

TEST(LinkCondition, HollowCubeFailsAtFirstCorner) {
    const auto hc = CubeComplex::from_ternary_words(words_up_to(3, 2));
    const auto r = check_link_condition(hc);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->cell, (CubeRef{0, 0}));
    EXPECT_EQ(r.counterexample->cell_label, "0:0");
    EXPECT_EQ(r.counterexample->triangle_labels.size(), 3u);
    EXPECT_FALSE(check_flag_condition(hc).passed);
    EXPECT_TRUE(check_link_condition(CubeComplex::from_ternary_words(words_up_to(3, 3))).passed);
}

TEST(LinkCondition, HollowTesseract) {
    // vertex links are tetrahedron boundaries: no empty triangle there, but not flag;
    // the per-cell check finds the empty triangle in an edge link
    const auto x = CubeComplex::from_ternary_words(words_up_to(4, 3));
    const auto r = check_link_condition(x);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_EQ(r.counterexample->cell.dim, 1);
    for (CellIndex v = 0; v < x.cell_count(0); ++v) EXPECT_FALSE(first_empty_triangle(vertex_link(x, v)).has_value());
    const auto flag = check_flag_condition(x);
    EXPECT_FALSE(flag.passed);
    ASSERT_EQ(flag.cells.size(), 16u);
    EXPECT_EQ(flag.cells[0].missing, (Simplex{0, 1, 2, 3}));
}

TEST(LinkCondition, CounterexampleIndependentOfThreads) {
    // every corner of the hollow 4-cube skeleton fails; the report must not depend on scheduling
    const auto x = CubeComplex::from_ternary_words(words_up_to(4, 2));
    const auto one = check_link_condition(x, 1);
    for (unsigned t : {2u, 3u, 8u}) {
        const auto many = check_link_condition(x, t);
        ASSERT_TRUE(many.counterexample.has_value());
        EXPECT_EQ(many.counterexample->cell, one.counterexample->cell);
        EXPECT_EQ(many.counterexample->triangle, one.counterexample->triangle);
        const auto flag_one = check_flag_condition(x, false, 1);
        const auto flag_many = check_flag_condition(x, false, t);
        ASSERT_EQ(flag_one.cells.size(), flag_many.cells.size());
        for (std::size_t i = 0; i < flag_one.cells.size(); ++i) {
            EXPECT_EQ(flag_one.cells[i].cell, flag_many.cells[i].cell);
            EXPECT_EQ(flag_one.cells[i].missing, flag_many.cells[i].missing);
        }
    }
}

TEST(LinkCondition, RandomGraphsPass) {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 60; ++i) {
        auto g = testing_support::share(random_colored_graph(rng));
        for (bool ordered : {true, false}) {
            const auto space = build_space(g, 2, ordered, {});
            const auto tri = check_link_condition(space);
            const auto flag = check_flag_condition(space);
            EXPECT_TRUE(tri.passed) << "graph " << i;
            // flag on vertex links implies the triangle condition everywhere
            if (flag.passed) {
                EXPECT_TRUE(tri.passed);
            }
        }
    }
}
