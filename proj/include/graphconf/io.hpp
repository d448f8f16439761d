#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphconf/colored_graph.hpp"
#include "graphconf/config_space.hpp"
#include "graphconf/morphism.hpp"
#include "graphconf/splitting.hpp"

namespace graphconf {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + " is missing \"" + key + "\"");
    return j.at(key);
}

inline std::int64_t require_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
    return j.get<std::int64_t>();
}

// Ids listed in any order must be exactly 0..count-1.
inline std::size_t contiguous_index(const Json& id, std::vector<bool>& seen, const std::string& what) {
    const auto v = require_int(id, what + " id");
    if (v < 0 || static_cast<std::size_t>(v) >= seen.size())
        throw ParseError(what + " ids must be 0-based and contiguous; got " + std::to_string(v));
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("duplicate " + what + " id " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
    return static_cast<std::size_t>(v);
}

} // namespace detail

inline Json to_json(const Color& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return std::get<std::string>(c);
}

inline Json to_json(const ColoredGraph& g) {
    Json vs = Json::array(), es = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back({{"id", v}, {"color", to_json(g.color(v))}});
    for (const auto& e : g.edges()) es.push_back(Json::array({e.tail, e.head}));
    return {{"vertices", vs}, {"edges", es}};
}

/// Vertices as {"id", "color"} (color defaults to the id), edges as [tail, head].
inline ColoredGraph graph_from_json(const Json& j) {
    const auto& vs = detail::require(j, "vertices", "graph");
    const auto& es = detail::require(j, "edges", "graph");
    if (!vs.is_array() || !es.is_array()) throw ParseError("graph \"vertices\" and \"edges\" must be arrays");
    std::vector<bool> seen(vs.size(), false);
    std::vector<Color> colors(vs.size());
    for (const auto& v : vs) {
        const auto id = detail::contiguous_index(detail::require(v, "id", "vertex"), seen, "vertex");
        if (!v.contains("color"))
            colors[id] = static_cast<std::int64_t>(id);
        else if (v["color"].is_number_integer())
            colors[id] = v["color"].get<std::int64_t>();
        else if (v["color"].is_string())
            colors[id] = v["color"].get<std::string>();
        else
            throw ParseError("vertex " + std::to_string(id) + " color must be a string or an integer");
    }
    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge " + std::to_string(edges.size()) + " must be [tail, head]");
        const auto t = detail::require_int(e[0], "edge tail"), h = detail::require_int(e[1], "edge head");
        if (t < 0 || h < 0) throw ParseError("edge " + std::to_string(edges.size()) + " has a negative endpoint");
        edges.push_back({static_cast<VertexId>(t), static_cast<VertexId>(h)});
    }
    try {
        return ColoredGraph(std::move(colors), std::move(edges));
    } catch (const InvalidArgument& ex) {
        throw ParseError(ex.what());
    }
}

inline Json to_json(const GraphMorphism& f) {
    Json em = Json::array();
    for (EdgeId e = 0; e < f.domain().edge_count(); ++e)
        em.push_back({{"edge", e}, {"image", f.map_edge(e).image}, {"flip", f.map_edge(e).flip}});
    return {{"domain", to_json(f.domain())},
            {"codomain", to_json(f.codomain())},
            {"vertex_map", std::vector<VertexId>(f.vertex_map().begin(), f.vertex_map().end())},
            {"edge_map", em}};
}

inline GraphMorphism morphism_from_json(const Json& j) {
    auto dom = std::make_shared<const ColoredGraph>(graph_from_json(detail::require(j, "domain", "morphism")));
    auto cod = std::make_shared<const ColoredGraph>(graph_from_json(detail::require(j, "codomain", "morphism")));
    const auto& vm = detail::require(j, "vertex_map", "morphism");
    const auto& em = detail::require(j, "edge_map", "morphism");
    if (!vm.is_array() || !em.is_array()) throw ParseError("morphism maps must be arrays");
    std::vector<VertexId> vmap;
    for (const auto& v : vm) {
        const auto x = detail::require_int(v, "vertex_map entry");
        if (x < 0) throw ParseError("vertex_map entry is negative");
        vmap.push_back(static_cast<VertexId>(x));
    }
    std::vector<bool> seen(em.size(), false);
    std::vector<EdgeImage> emap(em.size());
    for (const auto& e : em) {
        const auto id = detail::contiguous_index(detail::require(e, "edge", "edge_map entry"), seen, "edge_map edge");
        const auto img = detail::require_int(detail::require(e, "image", "edge_map entry"), "edge image");
        if (img < 0) throw ParseError("edge image is negative");
        const auto& flip = e.contains("flip") ? e["flip"] : Json(false);
        if (!flip.is_boolean()) throw ParseError("edge flip must be a boolean");
        emap[id] = {static_cast<EdgeId>(img), flip.get<bool>()};
    }
    try {
        return GraphMorphism(std::move(dom), std::move(cod), std::move(vmap), std::move(emap));
    } catch (const InvalidArgument& ex) {
        throw ParseError(ex.what());
    }
}

/// Complex interchange form: cells per dimension with their factors, and the
/// facet ids of every cell of positive dimension.
inline Json to_json(const ConfigSpace& space) {
    Json cells = Json::array(), faces = Json::array();
    const auto& x = space.complex();
    for (int d = 0; d <= space.dimension(); ++d) {
        Json layer = Json::array(), flayer = Json::array();
        for (CellIndex c = 0; c < space.cell_count(d); ++c) {
            Json fs = Json::array();
            for (auto f : space.factors(d, c)) fs.push_back(to_string(f));
            layer.push_back({{"id", c}, {"factors", fs}});
            if (d > 0) {
                auto facets = x.facets(d, c);
                flayer.push_back(std::vector<CellIndex>(facets.begin(), facets.end()));
            }
        }
        cells.push_back(std::move(layer));
        faces.push_back(std::move(flayer));
    }
    return {{"n", space.tokens()},
            {"ordered", space.ordered()},
            {"graph", to_json(space.graph())},
            {"cells", cells},
            {"faces", faces}};
}

/// Rebuilds the space from the embedded graph and requires the stored cells
/// and faces to match exactly.
inline ConfigSpace space_from_json(const Json& j, BuildOptions options = {}) {
    const auto n = detail::require_int(detail::require(j, "n", "complex"), "complex n");
    if (n < 1) throw ParseError("complex n must be positive");
    const bool ordered = j.contains("ordered") ? j["ordered"].get<bool>() : true;
    auto g = std::make_shared<const ColoredGraph>(graph_from_json(detail::require(j, "graph", "complex")));
    auto space = build_space(g, static_cast<int>(n), ordered, options);
    const auto& cells = detail::require(j, "cells", "complex");
    const auto& faces = detail::require(j, "faces", "complex");
    const auto dims = static_cast<std::size_t>(space.dimension() + 1);
    if (!cells.is_array() || cells.size() != dims || !faces.is_array() || faces.size() != dims)
        throw ParseError("complex has " + std::to_string(cells.size()) + " cell layers, expected " + std::to_string(dims));
    for (int d = 0; d <= space.dimension(); ++d) {
        const auto& layer = cells[static_cast<std::size_t>(d)];
        if (layer.size() != space.cell_count(d))
            throw ParseError("dimension " + std::to_string(d) + " cell count differs from the rebuilt complex");
        for (CellIndex c = 0; c < layer.size(); ++c) {
            const auto& cell = layer[c];
            if (detail::require_int(detail::require(cell, "id", "cell"), "cell id") != c)
                throw ParseError("cell ids must be listed in order");
            std::vector<Cell> fs;
            for (const auto& f : detail::require(cell, "factors", "cell")) fs.push_back(parse_cell(f.get<std::string>()));
            if (fs != space.factors(d, c))
                throw ParseError("cell " + std::to_string(d) + ":" + std::to_string(c) + " differs from the rebuilt complex");
            if (d > 0) {
                const auto facets = space.complex().facets(d, c);
                if (faces[static_cast<std::size_t>(d)].at(c).get<std::vector<CellIndex>>() !=
                    std::vector<CellIndex>(facets.begin(), facets.end()))
                    throw ParseError("faces of cell " + std::to_string(d) + ":" + std::to_string(c) + " differ");
            }
        }
    }
    return space;
}

inline Json to_json(const CellLink& link) {
    Json moves = Json::array(), simplices = Json::array();
    for (const auto& m : link.moves)
        moves.push_back({{"position", m.position}, {"edge", m.edge}, {"coface", m.coface}});
    for (int d = 0; d <= link.complex.dimension(); ++d)
        for (const auto& s : link.complex.faces(d)) simplices.push_back(s);
    return {{"vertices", moves}, {"simplices", simplices}};
}

/// 1-skeleton of the complex as an undirected DOT graph.
inline std::string skeleton_dot(const ConfigSpace& space) {
    std::ostringstream out;
    out << "graph configurations {\n";
    for (CellIndex v = 0; v < space.cell_count(0); ++v)
        out << "  c" << v << " [label=\"" << space.describe(0, v) << "\"];\n";
    const auto& x = space.complex();
    for (CellIndex e = 0; e < space.cell_count(1); ++e)
        out << "  c" << x.facet(1, e, 0, Side::low) << " -- c" << x.facet(1, e, 0, Side::high) << ";\n";
    out << "}\n";
    return out.str();
}

inline Json to_json(const FiberData& d) {
    Json relators = Json::array();
    for (const auto& r : d.presentation.relators) relators.push_back(r);
    Json j{{"euler", d.euler}, {"b1", d.b1}, {"vertices", d.vertices}, {"group", group_label(d)}};
    if (d.free_rank)
        j["free_rank"] = *d.free_rank;
    else
        j["presentation"] = {{"generators", d.presentation.generators}, {"relators", relators}};
    return j;
}

inline Json to_json(const DecompositionGraph& dg) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t i = 0; i < dg.nodes.size(); ++i) {
        const auto& n = dg.nodes[i];
        nodes.push_back({{"id", i}, {"over_vertex", n.base}, {"component", n.component}, {"fiber", to_json(n.data)}});
    }
    for (std::size_t i = 0; i < dg.edges.size(); ++i) {
        const auto& e = dg.edges[i];
        edges.push_back({{"id", i},
                         {"over_edge", e.base},
                         {"component", e.component},
                         {"tail", e.tail},
                         {"head", e.head},
                         {"fiber", to_json(e.data)}});
    }
    return {{"n", dg.tokens},
            {"graph", to_json(*dg.graph)},
            {"over_base_graph", dg.over_base_graph},
            {"euler", {{"total", dg.parent_euler}, {"from_fibers", dg.fiber_euler_sum}}},
            {"components", {{"decomposition", dg.component_count}, {"configuration_space", dg.parent_component_count}}},
            {"nodes", nodes},
            {"edges", edges}};
}

/// Underlying graph with fiber groups as labels.
inline std::string decomposition_dot(const DecompositionGraph& dg) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    for (std::size_t i = 0; i < dg.nodes.size(); ++i) {
        const auto& n = dg.nodes[i];
        out << "  n" << i << " [label=\"v" << n.base << "." << n.component << ": " << group_label(n.data) << "\"];\n";
    }
    for (const auto& e : dg.edges)
        out << "  n" << e.tail << " -- n" << e.head << " [label=\"e" << e.base << "." << e.component << ": "
            << group_label(e.data) << "\"];\n";
    out << "}\n";
    return out.str();
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

inline ColoredGraph read_graph_file(const std::string& path) {
    try {
        return graph_from_json(read_json_file(path));
    } catch (const ParseError& ex) {
        const std::string msg = ex.what();
        throw ParseError(msg.rfind(path, 0) == 0 ? msg : path + ": " + msg);
    }
}

inline GraphMorphism read_morphism_file(const std::string& path) {
    try {
        return morphism_from_json(read_json_file(path));
    } catch (const ParseError& ex) {
        const std::string msg = ex.what();
        throw ParseError(msg.rfind(path, 0) == 0 ? msg : path + ": " + msg);
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

} // namespace graphconf
