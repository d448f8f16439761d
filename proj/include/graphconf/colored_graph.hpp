#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphconf/detail/union_find.hpp"
#include "graphconf/error.hpp"

namespace graphconf {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Colors are opaque tokens; only equality matters. Integers and strings are
// distinct even when they print the same.
using Color = std::variant<std::int64_t, std::string>;

inline std::string to_string(const Color& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

struct Edge {
    VertexId tail;
    VertexId head;
    bool operator==(const Edge&) const = default;
};

enum class CellKind : std::uint8_t { vertex = 0, edge = 1 };

// A cell of the underlying graph. Ordered vertices-before-edges, then by id.
struct Cell {
    CellKind kind = CellKind::vertex;
    std::uint32_t id = 0;

    static constexpr Cell vertex(VertexId v) { return {CellKind::vertex, v}; }
    static constexpr Cell edge(EdgeId e) { return {CellKind::edge, e}; }
    bool is_vertex() const { return kind == CellKind::vertex; }
    bool is_edge() const { return kind == CellKind::edge; }

    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(Cell c) {
    return (c.is_vertex() ? "v" : "e") + std::to_string(c.id);
}

// Inverse of to_string(Cell): "v3" or "e12".
inline Cell parse_cell(std::string_view s) {
    if (s.size() < 2 || (s[0] != 'v' && s[0] != 'e'))
        throw ParseError("bad cell token '" + std::string(s) + "'");
    std::uint32_t id = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), id);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad cell token '" + std::string(s) + "'");
    return s[0] == 'v' ? Cell::vertex(id) : Cell::edge(id);
}

// Cells are also addressed by a dense code: vertices 0..V-1, then edges V..V+E-1.
// Code order equals Cell order.
using CellCode = std::uint32_t;

/// A finite loop-free multigraph with a vertex coloring.
///
/// Immutable after construction. Colors are interned into dense color classes
/// numbered by first appearance in vertex-id order, so relabeling colors by a
/// bijection leaves every derived structure unchanged.
class ColoredGraph {
public:
    ColoredGraph() = default;

    ColoredGraph(std::vector<Color> vertex_colors, std::vector<Edge> edges)
        : colors_(std::move(vertex_colors)), edges_(std::move(edges)) {
        const auto nv = colors_.size();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto& [t, h] = edges_[e];
            if (t >= nv || h >= nv)
                throw InvalidArgument("edge " + std::to_string(e) + " refers to a missing vertex");
            if (t == h)
                throw InvalidArgument("edge " + std::to_string(e) + " is a loop");
        }
        std::map<Color, std::uint32_t> intern;
        color_class_.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            auto [it, inserted] = intern.try_emplace(colors_[v], static_cast<std::uint32_t>(intern.size()));
            color_class_[v] = it->second;
        }
        color_class_count_ = intern.size();

        incidence_.assign(nv, {});
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            incidence_[edges_[e].tail].push_back(e);
            incidence_[edges_[e].head].push_back(e);
        }

        closed_colors_.resize(nv + edges_.size());
        for (VertexId v = 0; v < nv; ++v) closed_colors_[v] = {color_class_[v], color_class_[v], 1};
        for (EdgeId e = 0; e < edges_.size(); ++e) {
            auto a = color_class_[edges_[e].tail];
            auto b = color_class_[edges_[e].head];
            if (a > b) std::swap(a, b);
            closed_colors_[nv + e] = {a, b, static_cast<std::uint32_t>(a == b ? 1 : 2)};
        }
    }

    // The uncolored graph: color = vertex id.
    static ColoredGraph uncolored(std::size_t vertex_count, std::vector<Edge> edges) {
        std::vector<Color> colors(vertex_count);
        for (std::size_t v = 0; v < vertex_count; ++v) colors[v] = static_cast<std::int64_t>(v);
        return ColoredGraph(std::move(colors), std::move(edges));
    }

    std::size_t vertex_count() const { return colors_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t cell_count() const { return colors_.size() + edges_.size(); }

    const Color& color(VertexId v) const { return colors_.at(v); }
    std::span<const Color> colors() const { return colors_; }
    std::uint32_t color_class(VertexId v) const { return color_class_[v]; }
    std::size_t color_class_count() const { return color_class_count_; }
    bool injective_coloring() const { return color_class_count_ == colors_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const { return edges_; }

    // Incident edge ids, ascending.
    std::span<const EdgeId> incident_edges(VertexId v) const { return incidence_.at(v); }
    std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

    VertexId opposite(EdgeId e, VertexId v) const {
        const auto& ed = edges_[e];
        return ed.tail == v ? ed.head : ed.tail;
    }

    bool contains(Cell c) const {
        return c.is_vertex() ? c.id < vertex_count() : c.id < edge_count();
    }

    CellCode code(Cell c) const {
        if (!contains(c)) throw InvalidArgument("dangling cell reference " + to_string(c));
        return c.is_vertex() ? c.id : static_cast<CellCode>(vertex_count() + c.id);
    }

    Cell cell(CellCode code) const {
        return code < vertex_count() ? Cell::vertex(code)
                                     : Cell::edge(static_cast<EdgeId>(code - vertex_count()));
    }

    bool is_edge_code(CellCode code) const { return code >= vertex_count(); }

    // Color classes of the closed cell (one or two entries, ascending, distinct).
    std::span<const std::uint32_t> closed_colors(CellCode code) const {
        const auto& cc = closed_colors_[code];
        return {cc.data(), cc[2]};
    }

    // Vertex set of the closed cell: the vertex itself, or an edge's two endpoints.
    std::vector<VertexId> boundary_vertices(Cell c) const {
        if (!contains(c)) throw InvalidArgument("dangling cell reference " + to_string(c));
        if (c.is_vertex()) return {c.id};
        return {edges_[c.id].tail, edges_[c.id].head};
    }

    // Component label per vertex, numbered by least vertex.
    std::vector<std::uint32_t> vertex_components(std::uint32_t* count = nullptr) const {
        detail::UnionFind uf(vertex_count());
        for (const auto& e : edges_) uf.unite(e.tail, e.head);
        return uf.labels(count);
    }

    bool connected() const {
        std::uint32_t count = 0;
        vertex_components(&count);
        return count == 1;
    }

    bool operator==(const ColoredGraph& o) const { return colors_ == o.colors_ && edges_ == o.edges_; }

private:
    std::vector<Color> colors_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> color_class_;
    std::size_t color_class_count_ = 0;
    std::vector<std::vector<EdgeId>> incidence_;
    // {lo, hi, count}
    std::vector<std::array<std::uint32_t, 3>> closed_colors_;
};

enum class GraphKind { complete, complete_bipartite, cycle, path, star };

/// Standard constructors, all with the injective default coloring.
///   complete [n]            K_n, edges (i,j) for i<j in lexicographic order
///   complete_bipartite [m,n] K_{m,n}, parts 0..m-1 and m..m+n-1
///   cycle [n]               n >= 2; edge i joins i and i+1 mod n (n = 2 gives a digon)
///   path [n]                n vertices in a row
///   star [k]                K_{1,k} with center 0
inline ColoredGraph standard_graph(GraphKind kind, std::span<const int> params) {
    const std::size_t want = kind == GraphKind::complete_bipartite ? 2 : 1;
    if (params.size() != want)
        throw InvalidArgument("expected " + std::to_string(want) + " parameter(s)");
    for (int p : params)
        if (p <= 0) throw InvalidArgument("graph parameters must be positive");

    std::vector<Edge> edges;
    std::size_t nv = 0;
    switch (kind) {
    case GraphKind::complete: {
        nv = static_cast<std::size_t>(params[0]);
        for (VertexId i = 0; i < nv; ++i)
            for (VertexId j = i + 1; j < nv; ++j) edges.push_back({i, j});
        break;
    }
    case GraphKind::complete_bipartite: {
        const auto m = static_cast<VertexId>(params[0]);
        const auto n = static_cast<VertexId>(params[1]);
        nv = m + n;
        for (VertexId i = 0; i < m; ++i)
            for (VertexId j = 0; j < n; ++j) edges.push_back({i, m + j});
        break;
    }
    case GraphKind::cycle: {
        if (params[0] < 2) throw InvalidArgument("a cycle of length 1 would be a loop");
        nv = static_cast<std::size_t>(params[0]);
        for (VertexId i = 0; i < nv; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % nv)});
        break;
    }
    case GraphKind::path: {
        nv = static_cast<std::size_t>(params[0]);
        for (VertexId i = 0; i + 1 < nv; ++i) edges.push_back({i, i + 1});
        break;
    }
    case GraphKind::star: {
        nv = static_cast<std::size_t>(params[0]) + 1;
        for (VertexId i = 1; i < nv; ++i) edges.push_back({0, i});
        break;
    }
    }
    return ColoredGraph::uncolored(nv, std::move(edges));
}

inline ColoredGraph standard_graph(GraphKind kind, std::initializer_list<int> params) {
    return standard_graph(kind, std::span<const int>(params.begin(), params.size()));
}

inline ColoredGraph complete_graph(int n) { return standard_graph(GraphKind::complete, {n}); }
inline ColoredGraph complete_bipartite_graph(int m, int n) {
    return standard_graph(GraphKind::complete_bipartite, {m, n});
}
inline ColoredGraph cycle_graph(int n) { return standard_graph(GraphKind::cycle, {n}); }
inline ColoredGraph path_graph(int n) { return standard_graph(GraphKind::path, {n}); }
inline ColoredGraph star_graph(int k) { return standard_graph(GraphKind::star, {k}); }

/// Replaces edge e = (t, h) by (t, w) and (w, h) through a fresh vertex w
/// colored new_color. The first half keeps id e, the second half gets the next
/// edge id, and w gets the next vertex id; every other id is unchanged.
inline ColoredGraph subdivide(const ColoredGraph& g, EdgeId e, Color new_color) {
    if (e >= g.edge_count()) throw InvalidArgument("unknown edge id " + std::to_string(e));
    std::vector<Color> colors(g.colors().begin(), g.colors().end());
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const auto w = static_cast<VertexId>(colors.size());
    colors.push_back(std::move(new_color));
    const auto head = edges[e].head;
    edges[e].head = w;
    edges.push_back({w, head});
    return ColoredGraph(std::move(colors), std::move(edges));
}

} // namespace graphconf
