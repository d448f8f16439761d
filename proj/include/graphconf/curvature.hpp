#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "graphconf/config_space.hpp"
#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/per_cell.hpp"
#include "graphconf/simplicial_complex.hpp"

namespace graphconf {

using Triangle = std::array<std::uint32_t, 3>;

/// First 3-clique of the 1-skeleton (lexicographic) that is not a 2-simplex.
/// Triangles are found by intersecting sorted neighbor lists along each edge.
inline std::optional<Triangle> first_empty_triangle(const SimplicialComplex& k) {
    const auto adj = k.adjacency();
    std::vector<std::uint32_t> common;
    for (const auto& e : k.faces(1)) {
        const auto a = e[0], b = e[1];
        common.clear();
        std::set_intersection(adj[a].begin(), adj[a].end(), adj[b].begin(), adj[b].end(), std::back_inserter(common));
        for (auto c : common)
            if (c > b && !k.contains({a, b, c})) return Triangle{a, b, c};
    }
    return std::nullopt;
}

/// First clique of the 1-skeleton that does not span a simplex, if any.
/// Checks that F ∪ {w} is a face for every face F and every w > max(F)
/// adjacent to all of F, which by induction covers every clique.
inline std::optional<Simplex> first_missing_clique(const SimplicialComplex& k) {
    const auto adj = k.adjacency();
    std::vector<std::uint32_t> cand, next;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& f : k.faces(d)) {
            cand.assign(adj[f[0]].begin(), adj[f[0]].end());
            for (std::size_t i = 1; i < f.size() && !cand.empty(); ++i) {
                next.clear();
                std::set_intersection(cand.begin(), cand.end(), adj[f[i]].begin(), adj[f[i]].end(),
                                      std::back_inserter(next));
                cand.swap(next);
            }
            for (auto w : cand) {
                if (w <= f.back()) continue;
                Simplex g = f;
                g.push_back(w);
                if (!k.contains(g)) return g;
            }
        }
    return std::nullopt;
}

struct LinkConditionFailure {
    CubeRef cell;
    Triangle triangle{};      // link vertex indices
    std::string cell_label;   // factor tuple, or d:index for abstract complexes
    std::vector<std::string> triangle_labels;
};

struct LinkConditionResult {
    bool passed = true;
    std::size_t cells_checked = 0;
    std::optional<LinkConditionFailure> counterexample; // canonically first
};

struct FlagCell {
    CubeRef cell;
    bool flag = true;
    std::optional<Simplex> missing; // a clique that spans no simplex
};

struct FlagConditionResult {
    bool passed = true;
    std::vector<FlagCell> cells; // in canonical order
};

namespace detail {

template <typename LinkFn, typename LabelFn>
LinkConditionResult link_condition(const CubeComplex& x, unsigned threads, LinkFn&& link_of, LabelFn&& label) {
    auto hits = per_cell<std::pair<CubeRef, Triangle>>(x, threads, [&](int d, CellIndex c)
                                                           -> std::optional<std::pair<CubeRef, Triangle>> {
        auto t = first_empty_triangle(link_of(d, c));
        if (!t) return std::nullopt;
        return std::pair{CubeRef{d, c}, *t};
    });
    LinkConditionResult out;
    out.cells_checked = hits.size();
    for (auto& h : hits)
        if (h) {
            out.passed = false;
            LinkConditionFailure f;
            f.cell = h->first;
            f.triangle = h->second;
            label(f);
            out.counterexample = std::move(f);
            break;
        }
    return out;
}

} // namespace detail

/// Gromov's link condition on an abstract cube complex: for every cell,
/// every triangle of its link (from face incidence) bounds a 2-simplex.
inline LinkConditionResult check_link_condition(const CubeComplex& x, unsigned threads = 1) {
    return detail::link_condition(
        x, threads, [&](int d, CellIndex c) { return poset_link(x, d, c).complex; },
        [&](LinkConditionFailure& f) {
            f.cell_label = std::to_string(f.cell.dim) + ":" + std::to_string(f.cell.index);
            const auto link = poset_link(x, f.cell.dim, f.cell.index);
            for (auto v : f.triangle)
                f.triangle_labels.push_back(std::to_string(f.cell.dim + 1) + ":" +
                                            std::to_string(link.vertex_cells[v]));
        });
}

/// Link condition on a configuration complex using growth-move links.
inline LinkConditionResult check_link_condition(const ConfigSpace& space, unsigned threads = 1) {
    return detail::link_condition(
        space.complex(), threads, [&](int d, CellIndex c) { return cell_link(space, d, c).complex; },
        [&](LinkConditionFailure& f) {
            f.cell_label = space.describe(f.cell.dim, f.cell.index);
            const auto link = cell_link(space, f.cell.dim, f.cell.index);
            for (auto v : f.triangle) {
                const auto& m = link.moves[v];
                f.triangle_labels.push_back("position " + std::to_string(m.position) + " along e" +
                                            std::to_string(m.edge));
            }
        });
}

namespace detail {

template <typename LinkFn>
FlagConditionResult flag_condition(const CubeComplex& x, bool vertices_only, unsigned threads, LinkFn&& link_of) {
    auto hits = per_cell<FlagCell>(x, threads, [&](int d, CellIndex c) -> std::optional<FlagCell> {
        if (vertices_only && d > 0) return std::nullopt;
        FlagCell cell{{d, c}, true, first_missing_clique(link_of(d, c))};
        cell.flag = !cell.missing.has_value();
        return cell;
    });
    FlagConditionResult out;
    for (auto& h : hits)
        if (h) {
            out.passed = out.passed && h->flag;
            out.cells.push_back(std::move(*h));
        }
    return out;
}

} // namespace detail

/// Strict variant: every clique in the link spans a simplex.
inline FlagConditionResult check_flag_condition(const ConfigSpace& space, bool vertices_only = true,
                                                unsigned threads = 1) {
    return detail::flag_condition(space.complex(), vertices_only, threads,
                                  [&](int d, CellIndex c) { return cell_link(space, d, c).complex; });
}

inline FlagConditionResult check_flag_condition(const CubeComplex& x, bool vertices_only = true,
                                                unsigned threads = 1) {
    return detail::flag_condition(x, vertices_only, threads,
                                  [&](int d, CellIndex c) { return poset_link(x, d, c).complex; });
}

} // namespace graphconf
