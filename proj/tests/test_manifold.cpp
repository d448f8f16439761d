#include <gtest/gtest.h>

#include "support.hpp"

using namespace graphconf;

namespace {

SimplicialComplex cycle_complex(std::uint32_t n) {
    std::vector<Simplex> s;
    for (std::uint32_t i = 0; i < n; ++i) s.push_back({i, (i + 1) % n});
    return SimplicialComplex::closure(n, s);
}

} // namespace

TEST(ClassifyLink, LowDimensions) {
    EXPECT_EQ(classify_link(SimplicialComplex{}, -1).type, LinkType::sphere);
    EXPECT_EQ(classify_link(SimplicialComplex::closure(1, {}), -1).type, LinkType::not_manifold);
    EXPECT_EQ(classify_link(SimplicialComplex::closure(2, {}), 0).type, LinkType::sphere);
    EXPECT_EQ(classify_link(SimplicialComplex::closure(3, {}), 0).type, LinkType::not_manifold);
    EXPECT_EQ(classify_link(cycle_complex(5), 1).type, LinkType::sphere);
    EXPECT_EQ(classify_link(SimplicialComplex::closure(3, {{0, 1}, {1, 2}}), 1).type, LinkType::not_manifold);
    const auto two_cycles = SimplicialComplex::closure(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto r = classify_link(two_cycles, 1);
    EXPECT_EQ(r.type, LinkType::not_manifold);
    EXPECT_FALSE(r.reason.empty());
    EXPECT_EQ(classify_link(cycle_complex(4), 3).type, LinkType::unrecognized);
}

TEST(ClassifyLink, Surfaces) {
    const std::vector<Simplex> octahedron{{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                          {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};
    EXPECT_EQ(classify_link(SimplicialComplex::closure(6, octahedron), 2).type, LinkType::sphere);
    std::vector<Simplex> torus;
    for (std::uint32_t i = 0; i < 7; ++i) {
        torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    const auto t = classify_link(SimplicialComplex::closure(7, torus), 2);
    EXPECT_EQ(t.type, LinkType::torus);
    EXPECT_TRUE(t.orientable);
    const std::vector<Simplex> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                   {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
    EXPECT_EQ(classify_link(SimplicialComplex::closure(6, rp2), 2).type, LinkType::other_surface);
    EXPECT_EQ(classify_link(SimplicialComplex::closure(3, {{0, 1, 2}}), 2).type, LinkType::not_manifold);
    EXPECT_EQ(to_string(LinkType::klein_bottle), "klein-bottle");
}

TEST(Manifold, TwoTokenSpotChecks) {
    for (const auto& g : {complete_graph(5), complete_bipartite_graph(3, 3)}) {
        const auto r = manifold_away_from_skeleton(build_ordered(g, 2));
        EXPECT_TRUE(r.manifold);
        EXPECT_TRUE(r.defects.empty());
        EXPECT_EQ(r.tokens, 2);
    }
    for (const auto& g : {complete_graph(4), complete_graph(6), complete_bipartite_graph(2, 3),
                          complete_bipartite_graph(3, 4), star_graph(3), cycle_graph(6)}) {
        const auto space = build_ordered(g, 2);
        const auto r = manifold_away_from_skeleton(space);
        EXPECT_FALSE(r.manifold);
        ASSERT_FALSE(r.defects.empty());
        for (const auto& d : r.defects) {
            EXPECT_NE(d.type, LinkType::sphere);
            EXPECT_LT(d.cell.index, space.cell_count(d.cell.dim));
        }
    }
}

TEST(Manifold, AgreesWithSurfaceTestForTwoTokens) {
    for (const auto& [name, g] : testing_support::battery()) {
        if (!g->injective_coloring()) continue;
        const auto space = build_ordered(g, 2);
        const auto comps = connected_components(space.complex());
        bool all_closed = true;
        for (std::uint32_t k = 0; k < comps.count; ++k)
            all_closed = all_closed && surface_classify(space.complex(), comps, k).closed_surface;
        EXPECT_EQ(manifold_away_from_skeleton(space).manifold, all_closed) << name;
    }
}

TEST(Manifold, RequiresInjectiveOrderedInput) {
    EXPECT_THROW(manifold_away_from_skeleton(build_ordered(testing_support::colored_hexagon(), 2)), InvalidArgument);
    EXPECT_THROW(manifold_away_from_skeleton(build_unordered(complete_graph(5), 2)), InvalidArgument);
}

TEST(Manifold, K7ThreeTokens) {
    const auto space = build_ordered(complete_graph(7), 3);
    const auto& x = space.complex();
    for (CellIndex c = 0; c < x.cell_count(2); ++c) EXPECT_EQ(x.cofacets(2, c).size(), 2u);
    const auto cls = classify_links(space);
    EXPECT_EQ(cls.count(0, LinkType::torus), 210u);
    EXPECT_EQ(cls.count(1, LinkType::sphere), 1260u);
    EXPECT_EQ(cls.count(2, LinkType::sphere), 1890u);
    EXPECT_EQ(cls.count(3, LinkType::sphere), 630u);
    for (const auto& r : cls.records)
        if (r.cell.dim == 0) {
            EXPECT_TRUE(r.orientable);
            EXPECT_EQ(r.euler, 0);
        }
    EXPECT_TRUE(manifold_away_from_skeleton(space).manifold);
}

TEST(Manifold, K44MixedLinks) {
    // frozen from tests/oracles/config_oracle.py: 288 sphere and 48 torus vertex links
    const auto space = build_ordered(complete_bipartite_graph(4, 4), 3);
    const auto cls = classify_links(space);
    EXPECT_EQ(cls.count(0, LinkType::sphere), 288u);
    EXPECT_EQ(cls.count(0, LinkType::torus), 48u);
    const auto& x = space.complex();
    for (CellIndex c = 0; c < x.cell_count(3); ++c) {
        int tori = 0, spheres = 0;
        for (auto v : x.corners(3, c)) {
            const auto* r = cls.find({0, v});
            ASSERT_NE(r, nullptr);
            tori += r->type == LinkType::torus;
            spheres += r->type == LinkType::sphere;
        }
        EXPECT_EQ(tori, 2);
        EXPECT_EQ(spheres, 6);
    }
}

TEST(Manifold, ClassificationIndependentOfThreads) {
    const auto space = build_ordered(complete_graph(6), 3);
    const auto one = classify_links(space, 1);
    const auto four = classify_links(space, 4);
    ASSERT_EQ(one.records.size(), four.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) {
        EXPECT_EQ(one.records[i].cell, four.records[i].cell);
        EXPECT_EQ(one.records[i].type, four.records[i].type);
    }
}

TEST(Manifold, AbstractComplexLinks) {
    std::vector<std::string> words;
    for (const char* w : {"00", "01", "10", "11", "0*", "1*", "*0", "*1"}) words.emplace_back(w);
    const auto cls = classify_links(CubeComplex::from_ternary_words(words));
    EXPECT_EQ(cls.complex_dimension, 1);
    EXPECT_EQ(cls.count(0, LinkType::sphere), 4u);
    EXPECT_EQ(cls.count(1, LinkType::sphere), 4u);
}
