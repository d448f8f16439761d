#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "support.hpp"

using namespace graphconf;
using testing_support::data_path;

TEST(GraphJson, RoundTrip) {
    for (const auto& g : {complete_graph(4), testing_support::colored_hexagon(),
                          ColoredGraph({Color{std::int64_t{-3}}, Color{"x"}}, {{1, 0}})}) {
        const auto back = graph_from_json(to_json(g));
        EXPECT_EQ(back.vertex_count(), g.vertex_count());
        EXPECT_TRUE(std::ranges::equal(back.edges(), g.edges()));
        for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(back.color(v), g.color(v));
    }
}

TEST(GraphJson, DefaultsAndOrder) {
    const auto g = graph_from_json(Json::parse(R"({"vertices":[{"id":1},{"id":0,"color":"Z"}],"edges":[[0,1]]})"));
    EXPECT_EQ(g.color(0), Color{"Z"});
    EXPECT_EQ(g.color(1), Color{std::int64_t{1}});
}

TEST(GraphJson, Errors) {
    const char* bad[] = {
        R"({"edges":[]})",
        R"({"vertices":[{"id":0},{"id":2}],"edges":[]})",
        R"({"vertices":[{"id":0},{"id":0}],"edges":[]})",
        R"({"vertices":[{"id":0,"color":1.5}],"edges":[]})",
        R"({"vertices":[{"id":0},{"id":1}],"edges":[[0]]})",
        R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,-1]]})",
        R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,0]]})",
        R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,5]]})",
        R"({"vertices":{},"edges":[]})",
    };
    for (const char* text : bad) EXPECT_THROW(graph_from_json(Json::parse(text)), ParseError) << text;
}

TEST(MorphismJson, RoundTripAndFiles) {
    const auto f = read_morphism_file(data_path("hexagon_to_k3.json"));
    const auto again = morphism_from_json(to_json(f));
    for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(again.map_vertex(v), f.map_vertex(v));
    for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(again.map_edge(e), f.map_edge(e));
    EXPECT_TRUE(classify_morphism(f).covering);

    const auto cover = read_morphism_file(data_path("k5_double_cover.json"));
    const auto c = classify_morphism(cover);
    EXPECT_TRUE(c.covering);
    EXPECT_EQ(c.degree, 2u);
    EXPECT_TRUE(cover.domain().connected());
}

TEST(MorphismJson, Errors) {
    auto j = to_json(testing_support::hexagon_to_triangle());
    j["edge_map"][0]["flip"] = true;
    EXPECT_THROW(morphism_from_json(j), ParseError);
    j = to_json(testing_support::hexagon_to_triangle());
    j["vertex_map"][0] = -1;
    EXPECT_THROW(morphism_from_json(j), ParseError);
    j = to_json(testing_support::hexagon_to_triangle());
    j.erase("edge_map");
    EXPECT_THROW(morphism_from_json(j), ParseError);
}

TEST(ComplexJson, RoundTrip) {
    for (bool ordered : {true, false}) {
        const auto space = build_space(std::make_shared<const ColoredGraph>(complete_graph(5)), 2, ordered, {});
        const auto j = to_json(space);
        EXPECT_EQ(j["cells"][1][0]["factors"].size(), 2u);
        const auto back = space_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.complex(), space.complex());
        EXPECT_EQ(back.ordered(), ordered);
    }
}

TEST(ComplexJson, TamperingIsDetected) {
    auto j = to_json(build_ordered(complete_graph(4), 2));
    auto bad = j;
    bad["faces"][2][0][0] = j["faces"][2][0][0].get<int>() + 1;
    EXPECT_THROW(space_from_json(bad), ParseError);
    bad = j;
    bad["cells"][0][0]["factors"][0] = "v3";
    EXPECT_THROW(space_from_json(bad), ParseError);
    bad = j;
    bad["cells"][1].erase(0);
    EXPECT_THROW(space_from_json(bad), ParseError);
    bad = j;
    bad["n"] = 0;
    EXPECT_THROW(space_from_json(bad), ParseError);
}

TEST(Files, ReadErrorsNameThePath) {
    try {
        read_graph_file("/nonexistent/g.json");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/g.json"), std::string::npos);
    }
    const auto tmp = std::filesystem::temp_directory_path() / "graphconf_bad.json";
    write_text_file(tmp.string(), "{\"vertices\": [");
    EXPECT_THROW(read_graph_file(tmp.string()), ParseError);
    std::filesystem::remove(tmp);
}

TEST(Files, DataGraphs) {
    EXPECT_EQ(read_graph_file(data_path("k7.json")).edge_count(), 21u);
    EXPECT_EQ(read_graph_file(data_path("k33.json")).edge_count(), 9u);
    EXPECT_FALSE(read_graph_file(data_path("hexagon.json")).injective_coloring());
}

TEST(Dot, SkeletonAndDecomposition) {
    const auto dot = skeleton_dot(build_ordered(complete_graph(3), 2));
    EXPECT_EQ(dot.rfind("graph", 0), 0u);
    std::size_t edges = 0;
    for (auto pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
    EXPECT_EQ(edges, 6u);
    const auto ddot = decomposition_dot(decomposition_graph(complete_graph(5), 2));
    EXPECT_NE(ddot.find("F3"), std::string::npos);
}

TEST(LinkJson, Shape) {
    const auto space = build_ordered(complete_graph(5), 2);
    const auto j = to_json(cell_link(space, 0, 0));
    EXPECT_EQ(j["vertices"].size(), 6u);
    EXPECT_EQ(j["simplices"].size(), 12u);
}
