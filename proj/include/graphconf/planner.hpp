#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "graphconf/config_space.hpp"
#include "graphconf/cube_complex.hpp"

namespace graphconf {

// Token positions; sorted for unordered configurations.
using Configuration = std::vector<VertexId>;

struct Move {
    std::uint32_t token = 0; // index into the configuration before the move
    VertexId from = 0;
    VertexId to = 0;
    EdgeId edge = 0;
    bool operator==(const Move&) const = default;
};

struct LegalMove {
    Move move;
    Configuration result;
};

inline std::string to_string(const Configuration& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

inline void check_admissible(const ColoredGraph& g, const Configuration& c) {
    std::vector<std::uint8_t> used(g.color_class_count(), 0);
    for (auto v : c) {
        if (v >= g.vertex_count()) throw InvalidArgument("configuration names a missing vertex " + std::to_string(v));
        if (used[g.color_class(v)]++) throw InvalidArgument("configuration " + to_string(c) + " is not admissible");
    }
}

/// Single-token moves along one edge to a vertex whose color no other token
/// uses. For unordered configurations the input is sorted first and results
/// are sorted; `token` then indexes the sorted input.
inline std::vector<LegalMove> legal_moves(const ColoredGraph& g, Configuration c, bool ordered = true) {
    if (!ordered) std::sort(c.begin(), c.end());
    check_admissible(g, c);
    std::vector<std::uint32_t> used(g.color_class_count(), 0);
    for (auto v : c) ++used[g.color_class(v)];
    std::vector<LegalMove> out;
    for (std::uint32_t i = 0; i < c.size(); ++i) {
        --used[g.color_class(c[i])];
        for (auto e : g.incident_edges(c[i])) {
            const auto w = g.opposite(e, c[i]);
            if (used[g.color_class(w)]) continue;
            LegalMove m{{i, c[i], w, e}, c};
            m.result[i] = w;
            if (!ordered) std::sort(m.result.begin(), m.result.end());
            out.push_back(std::move(m));
        }
        ++used[g.color_class(c[i])];
    }
    return out;
}

inline Configuration configuration_of(const ConfigSpace& space, CellIndex v) {
    Configuration c;
    for (auto code : space.codes(0, v)) c.push_back(code);
    return c;
}

/// legal_moves checked against the neighbors of the 0-cell in the 1-skeleton.
inline std::vector<LegalMove> legal_moves(const ConfigSpace& space, const Configuration& c) {
    auto moves = legal_moves(space.graph(), c, space.ordered());
    auto v = space.find_vertex(c);
    if (!v) throw InvalidArgument("configuration " + to_string(c) + " is not a 0-cell");
    const auto& x = space.complex();
    std::vector<Configuration> expect, got;
    for (auto e : x.cofacets(0, *v)) {
        const auto lo = x.facet(1, e, 0, Side::low);
        expect.push_back(configuration_of(space, lo == *v ? x.facet(1, e, 0, Side::high) : lo));
    }
    for (const auto& m : moves) got.push_back(m.result);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got) throw Error("legal moves at " + to_string(c) + " disagree with the 1-skeleton");
    return moves;
}

/// A step is one move, or, with simultaneous steps, the moves across one cube.
struct Plan {
    std::vector<std::vector<Move>> steps;
    std::vector<Configuration> configurations; // start, then after each step

    std::size_t length() const { return steps.size(); }
    std::size_t move_count() const {
        std::size_t k = 0;
        for (const auto& s : steps) k += s.size();
        return k;
    }
};

/// Breadth-first search over 0-cells. Neighbors are visited in ascending
/// (cube dimension, cube index) order, so the result is deterministic. With
/// `simultaneous`, crossing any cube to its antipodal corner is one step.
inline std::optional<Plan> shortest_path(const ConfigSpace& space, Configuration start, Configuration goal,
                                         bool simultaneous = false) {
    if (!space.ordered()) {
        std::sort(start.begin(), start.end());
        std::sort(goal.begin(), goal.end());
    }
    if (start.size() != static_cast<std::size_t>(space.tokens()) || goal.size() != start.size())
        throw InvalidArgument("configurations must place " + std::to_string(space.tokens()) + " tokens");
    check_admissible(space.graph(), start);
    check_admissible(space.graph(), goal);
    const auto s = space.find_vertex(start), t = space.find_vertex(goal);
    if (!s || !t) throw InvalidArgument("configuration is not a 0-cell");

    const auto& x = space.complex();
    const auto nv = x.cell_count(0);
    std::vector<CubeRef> via(nv, CubeRef{-1, 0});
    std::vector<CellIndex> prev(nv, 0);
    via[*s] = {0, 0};
    std::deque<CellIndex> queue{*s};
    auto neighbors = [&](CellIndex v) {
        std::vector<std::pair<CubeRef, CellIndex>> out;
        if (!simultaneous) {
            for (auto e : x.cofacets(0, v)) {
                const auto lo = x.facet(1, e, 0, Side::low);
                out.push_back({{1, e}, lo == v ? x.facet(1, e, 0, Side::high) : lo});
            }
        } else {
            const auto levels = star(x, 0, v);
            for (std::size_t k = 1; k < levels.size(); ++k)
                for (auto c : levels[k]) {
                    const int d = static_cast<int>(k);
                    const auto corners = x.corners(d, c);
                    const auto mask = static_cast<std::uint32_t>(std::find(corners.begin(), corners.end(), v) - corners.begin());
                    out.push_back({{d, c}, corners[mask ^ ((1u << d) - 1)]});
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    while (!queue.empty() && via[*t].dim < 0) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto [cube, w] : neighbors(v))
            if (via[w].dim < 0) {
                via[w] = cube;
                prev[w] = v;
                queue.push_back(w);
            }
    }
    if (via[*t].dim < 0) return std::nullopt;

    std::vector<std::pair<CellIndex, CubeRef>> chain;
    for (auto v = *t; v != *s; v = prev[v]) chain.push_back({v, via[v]});
    std::reverse(chain.begin(), chain.end());
    Plan plan;
    plan.configurations.push_back(configuration_of(space, *s));
    const auto& g = space.graph();
    for (auto [v, cube] : chain) {
        const auto& before = plan.configurations.back();
        std::vector<Move> step;
        for (auto code : space.codes(cube.dim, cube.index)) {
            if (!g.is_edge_code(code)) continue;
            const auto e = static_cast<EdgeId>(code - g.vertex_count());
            const auto [a, b] = g.edge(e);
            const auto at = std::find(before.begin(), before.end(), a);
            const bool from_tail = at != before.end();
            const auto pos = from_tail ? at : std::find(before.begin(), before.end(), b);
            step.push_back({static_cast<std::uint32_t>(pos - before.begin()), from_tail ? a : b, from_tail ? b : a, e});
        }
        std::sort(step.begin(), step.end(), [](const Move& l, const Move& r) { return l.token < r.token; });
        plan.steps.push_back(std::move(step));
        plan.configurations.push_back(configuration_of(space, v));
    }
    return plan;
}

inline std::optional<Plan> shortest_path(std::shared_ptr<const ColoredGraph> g, int n, const Configuration& start,
                                         const Configuration& goal, bool ordered = true, bool simultaneous = false) {
    const auto space = ordered ? build_ordered(std::move(g), n) : build_unordered(std::move(g), n);
    return shortest_path(space, start, goal, simultaneous);
}

/// Replays a single-move plan through legal_moves; returns the final
/// configuration or throws at the first illegal move.
inline Configuration replay(const ColoredGraph& g, Configuration c, const Plan& plan, bool ordered = true) {
    if (!ordered) std::sort(c.begin(), c.end());
    for (const auto& step : plan.steps) {
        for (const auto& m : step) {
            const auto moves = legal_moves(g, c, ordered);
            // inside an unordered multi-move step, earlier moves re-sort the tokens
            const bool by_vertex = !ordered && step.size() > 1;
            auto it = std::find_if(moves.begin(), moves.end(), [&](const LegalMove& l) {
                return by_vertex ? l.move.from == m.from && l.move.to == m.to && l.move.edge == m.edge : l.move == m;
            });
            if (it == moves.end())
                throw Error("illegal move of token " + std::to_string(m.token) + " at " + to_string(c));
            c = it->result;
        }
    }
    return c;
}

} // namespace graphconf
