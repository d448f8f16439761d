#include <gtest/gtest.h>

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

TEST(CubeComplex, SolidSquare) {
    const auto sq = CubeComplex::from_ternary_words(words_up_to(2, 2));
    EXPECT_EQ(sq.cell_counts(), (std::vector<std::size_t>{4, 4, 1}));
    EXPECT_FALSE(sq.validate().has_value());
    EXPECT_EQ(euler_characteristic(sq), 1);
    EXPECT_EQ(homology(sq).betti, (std::vector<std::size_t>{1, 0, 0}));
    EXPECT_EQ(sq.corners(2, 0), (std::vector<CellIndex>{0, 2, 1, 3}));
}

TEST(CubeComplex, HollowCubeIsASphere) {
    const auto hc = CubeComplex::from_ternary_words(words_up_to(3, 2));
    EXPECT_EQ(hc.cell_counts(), (std::vector<std::size_t>{8, 12, 6}));
    EXPECT_FALSE(hc.validate().has_value());
    EXPECT_EQ(homology(hc).betti, (std::vector<std::size_t>{1, 0, 1}));
    const auto s = surface_classify(hc, connected_components(hc), 0);
    EXPECT_TRUE(s.closed_surface && s.orientable);
    EXPECT_EQ(s.genus, 0);
}

TEST(CubeComplex, TernaryWordErrors) {
    EXPECT_THROW(CubeComplex::from_ternary_words({"***"}), InvalidArgument);
    EXPECT_THROW(CubeComplex::from_ternary_words({"0", "01"}), InvalidArgument);
    EXPECT_THROW(CubeComplex::from_ternary_words({"2"}), InvalidArgument);
}

TEST(CubeComplex, ConstructorChecksFacets) {
    EXPECT_THROW(CubeComplex({2, 1}, {{}, {0}}), InvalidArgument);
    EXPECT_THROW(CubeComplex({2, 1}, {{}, {0, 2}}), InvalidArgument);
    EXPECT_NO_THROW(CubeComplex({2, 1}, {{}, {0, 1}}));
}

TEST(CubeComplex, ValidateCatchesTwistedSquare) {
    // vertices 00, 10, 01, 11; edges B, T, L, R
    const CubeComplex good({4, 4, 1}, {{}, {0, 1, 2, 3, 0, 2, 1, 3}, {2, 3, 0, 1}});
    EXPECT_FALSE(good.validate().has_value());
    const CubeComplex twisted({4, 4, 1}, {{}, {0, 1, 3, 2, 0, 2, 1, 3}, {2, 3, 0, 1}});
    EXPECT_TRUE(twisted.validate().has_value());
}

TEST(CubeComplex, BoundaryDegreeRange) {
    const auto sq = CubeComplex::from_ternary_words(words_up_to(2, 2));
    EXPECT_THROW(sq.boundary_matrix(0), InvalidArgument);
    EXPECT_THROW(sq.boundary_matrix(3), InvalidArgument);
    EXPECT_TRUE(sq.boundary_matrix(1).multiply(sq.boundary_matrix(2)).is_zero());
}

TEST(CubeComplex, ComponentsAndSubcomplexes) {
    const auto x = build_ordered(testing_support::colored_hexagon(), 2).complex();
    const auto comps = connected_components(x);
    ASSERT_EQ(comps.count, 2u);
    for (std::uint32_t k = 0; k < 2; ++k) {
        const auto sub = component_subcomplex(x, comps, k);
        EXPECT_EQ(sub.complex.cell_counts(), (std::vector<std::size_t>{12, 12}));
        EXPECT_EQ(connected_components(sub.complex).count, 1u);
        for (auto v : sub.to_parent[0]) EXPECT_EQ(comps.of(0, v), k);
    }
    EXPECT_THROW(component_subcomplex(x, comps, 2), InvalidArgument);

    std::vector<std::vector<bool>> keep{std::vector<bool>(x.cell_count(0), false), std::vector<bool>(x.cell_count(1), true)};
    EXPECT_THROW(subcomplex(x, keep), InvalidArgument);
}

TEST(CubeComplex, StarOfCorner) {
    const auto cube = CubeComplex::from_ternary_words(words_up_to(3, 3));
    const auto s = star(cube, 0, 0);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[1].size(), 3u);
    EXPECT_EQ(s[2].size(), 3u);
    EXPECT_EQ(s[3].size(), 1u);
}

TEST(CubeComplex, PosetLinks) {
    const auto solid = CubeComplex::from_ternary_words(words_up_to(3, 3));
    const auto filled = vertex_link(solid, 0);
    EXPECT_EQ(filled.face_count(2), 1u);
    const auto hollow = vertex_link(CubeComplex::from_ternary_words(words_up_to(3, 2)), 0);
    EXPECT_EQ(hollow.face_count(1), 3u);
    EXPECT_EQ(hollow.dimension(), 1);
    // link of an edge of the solid cube: two squares joined by the cube
    const auto el = poset_link(solid, 1, 0);
    EXPECT_EQ(el.vertex_cells.size(), 2u);
    EXPECT_EQ(el.complex.face_count(1), 1u);
    EXPECT_THROW(poset_link(solid, 4, 0), InvalidArgument);
}

TEST(CubeComplex, ConfigurationVertexLinkIsCycle) {
    // every vertex link of C2(K5) is a 6-cycle
    const auto x = build_ordered(complete_graph(5), 2).complex();
    for (CellIndex v = 0; v < x.cell_count(0); ++v) {
        const auto l = vertex_link(x, v);
        EXPECT_EQ(l.face_count(0), 6u);
        EXPECT_EQ(l.face_count(1), 6u);
        EXPECT_EQ(l.component_count(), 1u);
    }
}
