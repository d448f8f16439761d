#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "graphconf/colored_graph.hpp"

namespace graphconf {

struct RandomGraphOptions {
    int min_vertices = 2;
    int max_vertices = 8;
    int max_edges = 14;
};

/// Simple graph with a uniform vertex count, a uniform number of distinct
/// edges (at least one), random orientations and colors drawn from
/// 1..vertex_count labels. Deterministic for a given engine state.
inline ColoredGraph random_colored_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {}) {
    if (opt.min_vertices < 2 || opt.max_vertices < opt.min_vertices || opt.max_edges < 1)
        throw InvalidArgument("bad random graph bounds");
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int v = uniform(opt.min_vertices, opt.max_vertices);
    std::vector<Edge> pairs;
    for (VertexId a = 0; a < static_cast<VertexId>(v); ++a)
        for (VertexId b = a + 1; b < static_cast<VertexId>(v); ++b) pairs.push_back({a, b});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const int e = uniform(1, std::min<int>(opt.max_edges, static_cast<int>(pairs.size())));
    pairs.resize(static_cast<std::size_t>(e));
    std::sort(pairs.begin(), pairs.end(), [](const Edge& l, const Edge& r) {
        return std::pair{l.tail, l.head} < std::pair{r.tail, r.head};
    });
    for (auto& p : pairs)
        if (uniform(0, 1)) std::swap(p.tail, p.head);
    const int palette = uniform(1, v);
    std::vector<Color> colors;
    for (int i = 0; i < v; ++i) colors.emplace_back(static_cast<std::int64_t>(uniform(0, palette - 1)));
    return ColoredGraph(std::move(colors), std::move(pairs));
}

} // namespace graphconf
