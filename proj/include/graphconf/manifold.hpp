#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "graphconf/config_space.hpp"
#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/per_cell.hpp"
#include "graphconf/simplicial_complex.hpp"
#include "graphconf/topology.hpp"

namespace graphconf {

// `sphere` always means a sphere of the dimension expected for the cell.
enum class LinkType { sphere, torus, klein_bottle, other_surface, not_manifold, unrecognized };

inline constexpr std::array<LinkType, 6> all_link_types{LinkType::sphere,        LinkType::torus,
                                                        LinkType::klein_bottle,  LinkType::other_surface,
                                                        LinkType::not_manifold, LinkType::unrecognized};

inline std::string to_string(LinkType t) {
    switch (t) {
    case LinkType::sphere: return "sphere";
    case LinkType::torus: return "torus";
    case LinkType::klein_bottle: return "klein-bottle";
    case LinkType::other_surface: return "other-surface";
    case LinkType::not_manifold: return "not-manifold";
    case LinkType::unrecognized: return "unrecognized";
    }
    return "?";
}

struct LinkRecord {
    CubeRef cell;
    int expected_dimension = 0; // of the link: n - d - 1
    LinkType type = LinkType::not_manifold;
    std::size_t cofaces = 0;    // link vertices
    long euler = 0;
    bool orientable = false;    // meaningful for surfaces
    std::string reason;         // set for not_manifold
};

/// Classifies a link against the sphere of dimension `expected`.
/// Dimensions up to 1 are decided exactly; dimension 2 goes through the
/// closed-surface classification; higher dimensions are not recognized.
inline LinkRecord classify_link(const SimplicialComplex& k, int expected) {
    LinkRecord r;
    r.expected_dimension = expected;
    r.cofaces = k.vertex_count();
    r.euler = k.euler_characteristic();
    auto fail = [&](std::string why) {
        r.type = LinkType::not_manifold;
        r.reason = std::move(why);
        return r;
    };
    if (expected > 2) {
        r.type = LinkType::unrecognized;
        return r;
    }
    if (expected < 0) {
        if (!k.empty()) return fail("cell has cofaces");
        r.type = LinkType::sphere;
        return r;
    }
    if (k.dimension() != expected)
        return fail("link has dimension " + std::to_string(k.dimension()) + ", expected " + std::to_string(expected));
    if (expected == 0) {
        if (k.vertex_count() != 2) return fail(std::to_string(k.vertex_count()) + " cofaces");
        r.type = LinkType::sphere;
        return r;
    }
    if (expected == 1) {
        const auto adj = k.adjacency();
        for (const auto& a : adj)
            if (a.size() != 2) return fail("link vertex of degree " + std::to_string(a.size()));
        if (k.component_count() != 1) return fail(std::to_string(k.component_count()) + " circles");
        r.orientable = true;
        r.type = LinkType::sphere;
        return r;
    }
    const auto s = classify_surface(k);
    r.orientable = s.orientable;
    if (!s.closed_surface) return fail(s.witness);
    if (!s.connected) return fail("link surface is disconnected");
    if (s.euler == 2)
        r.type = LinkType::sphere;
    else if (s.euler == 0)
        r.type = s.orientable ? LinkType::torus : LinkType::klein_bottle;
    else
        r.type = LinkType::other_surface;
    return r;
}

struct LinkClassification {
    int complex_dimension = -1;
    std::vector<LinkRecord> records; // canonical order

    std::size_t count(int d, LinkType t) const {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const LinkRecord& r) {
            return r.cell.dim == d && r.type == t;
        }));
    }
    const LinkRecord* find(CubeRef cell) const {
        for (const auto& r : records)
            if (r.cell == cell) return &r;
        return nullptr;
    }
};

namespace detail {

template <typename LinkFn>
LinkClassification classify_links_with(const CubeComplex& x, int top, int min_dim, unsigned threads, LinkFn&& link_of) {
    auto hits = per_cell<LinkRecord>(x, threads, [&](int d, CellIndex c) -> std::optional<LinkRecord> {
        if (d < min_dim) return std::nullopt;
        auto r = classify_link(link_of(d, c), top - d - 1);
        r.cell = {d, c};
        return r;
    });
    LinkClassification out;
    out.complex_dimension = x.dimension();
    for (auto& h : hits)
        if (h) out.records.push_back(std::move(*h));
    return out;
}

} // namespace detail

/// Links of every cell of dimension at least dim X - 3, from growth moves.
inline LinkClassification classify_links(const ConfigSpace& space, unsigned threads = 1) {
    const int top = space.dimension();
    return detail::classify_links_with(space.complex(), top, std::max(0, top - 3), threads,
                                       [&](int d, CellIndex c) { return cell_link(space, d, c).complex; });
}

/// Same, from face incidence on an abstract cube complex.
inline LinkClassification classify_links(const CubeComplex& x, unsigned threads = 1) {
    const int top = x.dimension();
    return detail::classify_links_with(x, top, std::max(0, top - 3), threads,
                                       [&](int d, CellIndex c) { return poset_link(x, d, c).complex; });
}

struct ManifoldReport {
    bool manifold = true;
    int tokens = 0;
    std::size_t cells_checked = 0;
    std::vector<LinkRecord> defects; // canonical order
};

/// True iff every cell of dimension at least n - 2 has a link that is a sphere
/// of dimension n - d - 1, where n is the number of tokens.
inline ManifoldReport manifold_away_from_skeleton(const ConfigSpace& space, unsigned threads = 1) {
    if (!space.graph().injective_coloring())
        throw InvalidArgument("manifold criterion needs an injectively colored graph");
    if (!space.ordered()) throw InvalidArgument("manifold criterion needs an ordered configuration space");
    const int n = space.tokens();
    auto cls = detail::classify_links_with(space.complex(), n, std::max(0, n - 2), threads,
                                           [&](int d, CellIndex c) { return cell_link(space, d, c).complex; });
    ManifoldReport out;
    out.tokens = n;
    out.cells_checked = cls.records.size();
    for (auto& r : cls.records)
        if (r.type != LinkType::sphere) out.defects.push_back(std::move(r));
    out.manifold = out.defects.empty() && !space.complex().empty();
    return out;
}

} // namespace graphconf
