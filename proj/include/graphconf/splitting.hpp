#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphconf/config_space.hpp"
#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/parallel.hpp"
#include "graphconf/detail/union_find.hpp"
#include "graphconf/topology.hpp"

namespace graphconf {

/// A colored subgraph together with its embedding into the parent graph.
struct SubgraphEmbedding {
    std::shared_ptr<const ColoredGraph> graph;
    std::vector<VertexId> vertex_to_parent; // ascending
    std::vector<EdgeId> edge_to_parent;     // ascending
    std::size_t parent_vertex_count = 0;

    CellCode to_parent_code(CellCode code) const {
        if (!graph->is_edge_code(code)) return vertex_to_parent[code];
        return static_cast<CellCode>(parent_vertex_count + edge_to_parent[code - graph->vertex_count()]);
    }
};

/// Induced subgraph on the vertices whose colors avoid the colors of the
/// boundary vertices of `sigma`. Vertices and edges keep their relative order.
inline SubgraphEmbedding gamma_sigma(const ColoredGraph& g, Cell sigma) {
    const auto avoid = g.closed_colors(g.code(sigma));
    SubgraphEmbedding out;
    out.parent_vertex_count = g.vertex_count();
    std::vector<VertexId> local(g.vertex_count(), UINT32_MAX);
    std::vector<Color> colors;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (std::find(avoid.begin(), avoid.end(), g.color_class(v)) != avoid.end()) continue;
        local[v] = static_cast<VertexId>(out.vertex_to_parent.size());
        out.vertex_to_parent.push_back(v);
        colors.push_back(g.color(v));
    }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [t, h] = g.edge(e);
        if (local[t] == UINT32_MAX || local[h] == UINT32_MAX) continue;
        out.edge_to_parent.push_back(e);
        edges.push_back({local[t], local[h]});
    }
    out.graph = std::make_shared<const ColoredGraph>(std::move(colors), std::move(edges));
    return out;
}

/// The configuration space of Γ_σ on n-1 tokens, identified with the cubes of
/// the parent space whose first factor is σ.
struct Fiber {
    Cell sigma;
    SubgraphEmbedding subgraph;
    std::shared_ptr<const ConfigSpace> space;
    std::vector<std::vector<CellIndex>> to_parent; // per fiber dimension
};

/// Builds the fiber over σ and checks, cell by cell, that prepending σ is a
/// bijection onto the parent cubes with first factor σ that respects facets.
inline Fiber fiber(const ConfigSpace& parent, Cell sigma, BuildOptions options = {}) {
    if (parent.tokens() < 2) throw InvalidArgument("fiber needs at least two tokens");
    if (!parent.ordered()) throw InvalidArgument("fiber needs an ordered configuration space");
    const auto& g = parent.graph();
    const auto scode = g.code(sigma);
    const int shift = g.is_edge_code(scode) ? 1 : 0;

    Fiber out{sigma, gamma_sigma(g, sigma), nullptr, {}};
    out.space = std::make_shared<const ConfigSpace>(build_ordered(out.subgraph.graph, parent.tokens() - 1, options));
    const auto& fs = *out.space;
    const auto& fx = fs.complex();
    const auto& px = parent.complex();

    std::vector<CellCode> tuple;
    out.to_parent.resize(static_cast<std::size_t>(fx.dimension() + 1));
    for (int d = 0; d <= fx.dimension(); ++d)
        for (CellIndex c = 0; c < fx.cell_count(d); ++c) {
            tuple.assign(1, scode);
            for (auto code : fs.codes(d, c)) tuple.push_back(out.subgraph.to_parent_code(code));
            auto ref = parent.locate_codes(tuple);
            if (!ref || ref->dim != d + shift) throw Error("fiber cell " + fs.describe(d, c) + " is not a parent cube");
            out.to_parent[static_cast<std::size_t>(d)].push_back(ref->index);
        }

    // Surjectivity: count parent cubes whose first factor is σ.
    for (int pd = 0; pd <= px.dimension(); ++pd) {
        std::size_t count = 0;
        for (CellIndex c = 0; c < px.cell_count(pd); ++c) count += parent.codes(pd, c)[0] == scode;
        const int d = pd - shift;
        const std::size_t have = d >= 0 && d <= fx.dimension() ? fx.cell_count(d) : 0;
        if (count != have) throw Error("fiber over " + to_string(sigma) + " misses parent cubes in dimension " +
                                       std::to_string(pd));
    }

    for (int d = 1; d <= fx.dimension(); ++d)
        for (CellIndex c = 0; c < fx.cell_count(d); ++c)
            for (int axis = 0; axis < d; ++axis)
                for (auto side : {Side::low, Side::high}) {
                    const auto mine = out.to_parent[static_cast<std::size_t>(d - 1)][fx.facet(d, c, axis, side)];
                    const auto theirs = px.facet(d + shift, out.to_parent[static_cast<std::size_t>(d)][c], axis + shift, side);
                    if (mine != theirs) throw Error("fiber facets disagree with the parent at " + fs.describe(d, c));
                }
    return out;
}

inline Fiber fiber(std::shared_ptr<const ColoredGraph> g, int n, Cell sigma, BuildOptions options = {}) {
    if (n < 2) throw InvalidArgument("fiber needs n >= 2");
    return fiber(build_ordered(std::move(g), n, options), sigma, options);
}

// Invariants of one fiber component.
struct FiberData {
    long euler = 0;
    long b1 = 0;
    std::size_t vertices = 0;
    Presentation presentation;       // simplified
    std::optional<long> free_rank;   // when the simplified presentation has no relators
};

struct DecompositionNode {
    VertexId base = 0;        // vertex of G
    std::uint32_t component = 0;
    FiberData data;
};

struct DecompositionEdge {
    EdgeId base = 0;          // edge of G
    std::uint32_t component = 0;
    std::uint32_t tail = 0;   // node over the tail of `base`
    std::uint32_t head = 0;
    FiberData data;
};

struct DecompositionGraph {
    int tokens = 0;
    std::shared_ptr<const ColoredGraph> graph;
    std::vector<DecompositionNode> nodes;
    std::vector<DecompositionEdge> edges;
    // Every vertex and edge fiber is connected, so the splitting is over G itself.
    bool over_base_graph = false;
    long parent_euler = 0;
    long fiber_euler_sum = 0; // Σ_v χ(fiber_v) - Σ_e χ(fiber_e)
    std::uint32_t component_count = 0;        // of the decomposition graph
    std::uint32_t parent_component_count = 0; // of C_n(Γ)
    bool components_agree = false;

    bool euler_identity_holds() const { return parent_euler == fiber_euler_sum; }
};

namespace detail {

inline FiberData fiber_data(const CubeComplex& x, const Components& comps, std::uint32_t k) {
    FiberData out;
    for (int d = 0; d <= x.dimension(); ++d)
        for (CellIndex c = 0; c < x.cell_count(d); ++c)
            if (comps.of(d, c) == k) {
                out.euler += d % 2 == 0 ? 1 : -1;
                out.vertices += d == 0;
            }
    const auto h = homology(component_subcomplex(x, comps, k).complex);
    out.b1 = h.betti.size() > 1 ? h.betti[1] : 0;
    out.presentation = simplify(pi1_presentation(x, comps, k));
    if (out.presentation.relators.empty()) out.free_rank = static_cast<long>(out.presentation.generators);
    return out;
}

} // namespace detail

/// Splitting of C_n(Γ) over the graph with one node per component of each
/// vertex fiber and one edge per component of each edge fiber.
inline DecompositionGraph decomposition_graph(std::shared_ptr<const ColoredGraph> g, int n, BuildOptions options = {}) {
    if (n < 2) throw InvalidArgument("decomposition graph needs n >= 2");
    const auto parent = build_ordered(g, n, options);
    DecompositionGraph out;
    out.tokens = n;
    out.graph = g;

    const auto V = g->vertex_count(), E = g->edge_count();
    std::vector<std::optional<Fiber>> fibers(V + E);
    detail::for_each_chunk(V + E, V + E, options.threads, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t i = b; i < e; ++i)
            fibers[i] = fiber(parent, i < V ? Cell::vertex(static_cast<VertexId>(i))
                                            : Cell::edge(static_cast<EdgeId>(i - V)), {1});
    });
    std::vector<Components> comps;
    for (auto& f : fibers) comps.push_back(connected_components(f->space->complex()));

    std::vector<std::uint32_t> first_node(V + 1, 0);
    for (VertexId v = 0; v < V; ++v) {
        first_node[v] = static_cast<std::uint32_t>(out.nodes.size());
        const auto& x = fibers[v]->space->complex();
        for (std::uint32_t k = 0; k < comps[v].count; ++k) {
            out.nodes.push_back({v, k, detail::fiber_data(x, comps[v], k)});
            out.fiber_euler_sum += out.nodes.back().data.euler;
        }
    }
    first_node[V] = static_cast<std::uint32_t>(out.nodes.size());

    // Where a cell of the edge fiber lands in the vertex fiber over `v`.
    auto attach = [&](const Fiber& fe, int d, CellIndex c, VertexId v) {
        const auto& fv = *fibers[v];
        std::vector<CellCode> tuple;
        for (auto code : fe.space->codes(d, c)) {
            const auto pcode = fe.subgraph.to_parent_code(code);
            CellCode local;
            if (pcode < V) {
                auto it = std::lower_bound(fv.subgraph.vertex_to_parent.begin(), fv.subgraph.vertex_to_parent.end(), pcode);
                local = static_cast<CellCode>(it - fv.subgraph.vertex_to_parent.begin());
            } else {
                const auto pe = static_cast<EdgeId>(pcode - V);
                auto it = std::lower_bound(fv.subgraph.edge_to_parent.begin(), fv.subgraph.edge_to_parent.end(), pe);
                local = static_cast<CellCode>(fv.subgraph.graph->vertex_count() + (it - fv.subgraph.edge_to_parent.begin()));
            }
            tuple.push_back(local);
        }
        auto ref = fv.space->locate_codes(tuple);
        if (!ref) throw Error("edge fiber cell " + fe.space->describe(d, c) + " does not include into the fiber over v" +
                              std::to_string(v));
        return comps[v].of(ref->dim, ref->index);
    };

    for (EdgeId e = 0; e < E; ++e) {
        const auto& fe = *fibers[V + e];
        const auto& x = fe.space->complex();
        const auto& ce = comps[V + e];
        const auto [t, h] = g->edge(e);
        for (std::uint32_t k = 0; k < ce.count; ++k) {
            std::optional<std::uint32_t> at_tail, at_head;
            for (int d = 0; d <= x.dimension(); ++d)
                for (CellIndex c = 0; c < x.cell_count(d); ++c) {
                    if (ce.of(d, c) != k) continue;
                    const auto a = attach(fe, d, c, t), b = attach(fe, d, c, h);
                    if (!at_tail) {
                        at_tail = a;
                        at_head = b;
                    } else if (*at_tail != a || *at_head != b) {
                        throw Error("edge fiber component over e" + std::to_string(e) + " spans several components");
                    }
                }
            DecompositionEdge de{e, k, first_node[t] + *at_tail, first_node[h] + *at_head,
                                 detail::fiber_data(x, ce, k)};
            out.fiber_euler_sum -= de.data.euler;
            out.edges.push_back(std::move(de));
        }
    }

    out.over_base_graph = out.nodes.size() == V && out.edges.size() == E;
    out.parent_euler = euler_characteristic(parent.complex());

    detail::UnionFind uf(out.nodes.size());
    for (const auto& de : out.edges) uf.unite(de.tail, de.head);
    std::uint32_t count = 0;
    const auto node_label = uf.labels(&count);
    out.component_count = count;
    const auto pcomps = connected_components(parent.complex());
    out.parent_component_count = pcomps.count;

    // Every parent vertex lies in exactly one node; the two labelings must match.
    std::vector<std::uint32_t> forward(count, UINT32_MAX), backward(pcomps.count, UINT32_MAX);
    bool agree = count == pcomps.count;
    for (VertexId v = 0; v < V && agree; ++v) {
        const auto& fv = *fibers[v];
        for (CellIndex c = 0; c < fv.space->cell_count(0) && agree; ++c) {
            const auto dn = node_label[first_node[v] + comps[v].of(0, c)];
            const auto pc = pcomps.of(0, fv.to_parent[0][c]);
            if (forward[dn] == UINT32_MAX) forward[dn] = pc;
            if (backward[pc] == UINT32_MAX) backward[pc] = dn;
            agree = forward[dn] == pc && backward[pc] == dn;
        }
    }
    out.components_agree = agree;
    return out;
}

inline DecompositionGraph decomposition_graph(const ColoredGraph& g, int n, BuildOptions options = {}) {
    return decomposition_graph(std::make_shared<const ColoredGraph>(g), n, options);
}

// "1", "Z", "F3", or "<g | r>" for a non-free presentation.
inline std::string group_label(const FiberData& d) {
    if (d.free_rank) {
        if (*d.free_rank == 0) return "1";
        if (*d.free_rank == 1) return "Z";
        return "F" + std::to_string(*d.free_rank);
    }
    return "<" + std::to_string(d.presentation.generators) + " | " + std::to_string(d.presentation.relators.size()) + ">";
}

} // namespace graphconf
