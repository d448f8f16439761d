#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphconf/colored_graph.hpp"

namespace graphconf {

struct EdgeImage {
    EdgeId image = 0;
    bool flip = false; // true when tail maps to the image's head
    bool operator==(const EdgeImage&) const = default;
};

/// A combinatorial, color-preserving map between colored graphs.
///
/// Each domain edge maps homeomorphically onto one codomain edge; the flip
/// flag says which way round. Validated on construction.
class GraphMorphism {
public:
    GraphMorphism(std::shared_ptr<const ColoredGraph> domain, std::shared_ptr<const ColoredGraph> codomain,
                  std::vector<VertexId> vertex_map, std::vector<EdgeImage> edge_map)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), vertex_map_(std::move(vertex_map)),
          edge_map_(std::move(edge_map)) {
        if (!domain_ || !codomain_) throw InvalidArgument("morphism needs a domain and a codomain");
        const auto& d = *domain_;
        const auto& c = *codomain_;
        if (vertex_map_.size() != d.vertex_count())
            throw InvalidArgument("vertex map has the wrong length");
        if (edge_map_.size() != d.edge_count()) throw InvalidArgument("edge map has the wrong length");
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
            if (vertex_map_[v] >= c.vertex_count())
                throw InvalidArgument("vertex " + std::to_string(v) + " maps outside the codomain");
            if (d.color(v) != c.color(vertex_map_[v]))
                throw InvalidArgument("vertex " + std::to_string(v) + " changes color (" + to_string(d.color(v)) +
                                      " -> " + to_string(c.color(vertex_map_[v])) + ")");
        }
        for (EdgeId e = 0; e < d.edge_count(); ++e) {
            const auto [img, flip] = edge_map_[e];
            if (img >= c.edge_count())
                throw InvalidArgument("edge " + std::to_string(e) + " maps outside the codomain");
            const auto& src = d.edge(e);
            const auto& dst = c.edge(img);
            const auto want_t = flip ? dst.head : dst.tail;
            const auto want_h = flip ? dst.tail : dst.head;
            if (vertex_map_[src.tail] != want_t || vertex_map_[src.head] != want_h)
                throw InvalidArgument("edge " + std::to_string(e) + " does not map homeomorphically onto edge " +
                                      std::to_string(img));
        }
    }

    static GraphMorphism identity(std::shared_ptr<const ColoredGraph> g) {
        std::vector<VertexId> vm(g->vertex_count());
        std::vector<EdgeImage> em(g->edge_count());
        for (VertexId v = 0; v < vm.size(); ++v) vm[v] = v;
        for (EdgeId e = 0; e < em.size(); ++e) em[e] = {e, false};
        return GraphMorphism(g, g, std::move(vm), std::move(em));
    }

    const ColoredGraph& domain() const { return *domain_; }
    const ColoredGraph& codomain() const { return *codomain_; }
    const std::shared_ptr<const ColoredGraph>& domain_ptr() const { return domain_; }
    const std::shared_ptr<const ColoredGraph>& codomain_ptr() const { return codomain_; }

    VertexId map_vertex(VertexId v) const { return vertex_map_.at(v); }
    EdgeImage map_edge(EdgeId e) const { return edge_map_.at(e); }
    std::span<const VertexId> vertex_map() const { return vertex_map_; }
    std::span<const EdgeImage> edge_map() const { return edge_map_; }

    Cell map_cell(Cell c) const {
        return c.is_vertex() ? Cell::vertex(map_vertex(c.id)) : Cell::edge(map_edge(c.id).image);
    }

    CellCode map_code(CellCode code) const {
        const auto nv = static_cast<CellCode>(domain_->vertex_count());
        if (code < nv) return vertex_map_[code];
        return static_cast<CellCode>(codomain_->vertex_count()) + edge_map_[code - nv].image;
    }

private:
    std::shared_ptr<const ColoredGraph> domain_;
    std::shared_ptr<const ColoredGraph> codomain_;
    std::vector<VertexId> vertex_map_;
    std::vector<EdgeImage> edge_map_;
};

// outer ∘ inner
inline GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
    if (!(inner.codomain() == outer.domain())) throw InvalidArgument("morphisms are not composable");
    std::vector<VertexId> vm(inner.domain().vertex_count());
    std::vector<EdgeImage> em(inner.domain().edge_count());
    for (VertexId v = 0; v < vm.size(); ++v) vm[v] = outer.map_vertex(inner.map_vertex(v));
    for (EdgeId e = 0; e < em.size(); ++e) {
        const auto a = inner.map_edge(e);
        const auto b = outer.map_edge(a.image);
        em[e] = {b.image, a.flip != b.flip};
    }
    return GraphMorphism(inner.domain_ptr(), outer.codomain_ptr(), std::move(vm), std::move(em));
}

struct MorphismClass {
    bool injective = false;
    bool immersion = false;
    bool covering = false;
    bool surjective = false;
    // Fiber cardinality, set when covering holds and the codomain is connected.
    std::optional<std::size_t> degree;
};

/// Immersion: injective on every vertex star. Covering: bijective on every
/// vertex star. Stars are the sets of incident edges (no loops, so each edge
/// meets a vertex once).
inline MorphismClass classify_morphism(const GraphMorphism& f) {
    const auto& d = f.domain();
    const auto& c = f.codomain();
    MorphismClass out;

    std::vector<std::size_t> vhits(c.vertex_count(), 0), ehits(c.edge_count(), 0);
    for (auto v : f.vertex_map()) ++vhits[v];
    for (auto e : f.edge_map()) ++ehits[e.image];
    out.injective = std::all_of(vhits.begin(), vhits.end(), [](auto k) { return k <= 1; }) &&
                    std::all_of(ehits.begin(), ehits.end(), [](auto k) { return k <= 1; });
    out.surjective = std::all_of(vhits.begin(), vhits.end(), [](auto k) { return k >= 1; }) &&
                     std::all_of(ehits.begin(), ehits.end(), [](auto k) { return k >= 1; });

    bool immersion = true;
    bool covering = true;
    std::vector<EdgeId> images;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        images.clear();
        for (auto e : d.incident_edges(v)) images.push_back(f.map_edge(e).image);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
            immersion = false;
            covering = false;
            break;
        }
        if (images.size() != c.degree(f.map_vertex(v))) covering = false;
    }
    out.immersion = immersion;
    // Covering also requires onto. Star bijectivity alone already gives this
    // when the codomain is connected and the domain is not empty.
    out.covering = covering && out.surjective;
    if (out.covering && c.connected() && c.vertex_count() > 0) out.degree = vhits[0];
    return out;
}

} // namespace graphconf
