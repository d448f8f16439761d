#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphconf/detail/union_find.hpp"
#include "graphconf/error.hpp"
#include "graphconf/simplicial_complex.hpp"
#include "graphconf/smith.hpp"

namespace graphconf {

using CellIndex = std::uint32_t;

// A cell of a cube complex: its dimension and its index within that dimension.
struct CubeRef {
    int dim = 0;
    CellIndex index = 0;
    auto operator<=>(const CubeRef&) const = default;
};

enum class Side : std::uint8_t { low = 0, high = 1 };

/// Graded cube complex given by face incidence.
///
/// A d-cube has 2d facets stored axis by axis as (low, high) pairs. The facet
/// across axis j inherits the remaining axes in their original order and with
/// their original sides; this is what makes the signed boundary square to
/// zero. validate() checks the resulting cubical identities.
class CubeComplex {
public:
    CubeComplex() = default;

    /// counts[d] cells in dimension d; facets[d] (d >= 1) holds 2d ids per
    /// d-cell. facets[0] is ignored.
    CubeComplex(std::vector<std::size_t> counts, std::vector<std::vector<CellIndex>> facets)
        : counts_(std::move(counts)), facets_(std::move(facets)) {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
        facets_.resize(std::max<std::size_t>(counts_.size(), 1));
        for (std::size_t d = 1; d < counts_.size(); ++d) {
            if (facets_[d].size() != counts_[d] * 2 * d)
                throw InvalidArgument("dimension " + std::to_string(d) + " has the wrong number of facets");
            for (auto f : facets_[d])
                if (f >= counts_[d - 1]) throw InvalidArgument("facet id out of range");
        }
        facets_.resize(counts_.size());
        build_cofacets();
    }

    /// Cubical set from words over {0,1,*}: '*' marks a free axis. Every face of
    /// every word must be present. Cells are numbered in sorted word order.
    static CubeComplex from_ternary_words(std::vector<std::string> words) {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        std::vector<std::vector<std::string>> by_dim;
        for (const auto& w : words) {
            if (!words.empty() && w.size() != words.front().size())
                throw InvalidArgument("ternary words must have equal length");
            const auto d = static_cast<std::size_t>(std::count(w.begin(), w.end(), '*'));
            if (w.find_first_not_of("01*") != std::string::npos) throw InvalidArgument("bad ternary word " + w);
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].push_back(w);
        }
        std::vector<std::size_t> counts;
        std::vector<std::vector<CellIndex>> facets(by_dim.size());
        for (const auto& layer : by_dim) counts.push_back(layer.size());
        for (std::size_t d = 1; d < by_dim.size(); ++d) {
            for (const auto& w : by_dim[d])
                for (std::size_t p = 0; p < w.size(); ++p) {
                    if (w[p] != '*') continue;
                    for (char side : {'0', '1'}) {
                        auto face = w;
                        face[p] = side;
                        const auto& below = by_dim[d - 1];
                        auto it = std::lower_bound(below.begin(), below.end(), face);
                        if (it == below.end() || *it != face)
                            throw InvalidArgument("face " + face + " of " + w + " is missing");
                        facets[d].push_back(static_cast<CellIndex>(it - below.begin()));
                    }
                }
        }
        return CubeComplex(std::move(counts), std::move(facets));
    }

    // Highest dimension with cells; -1 for the empty complex.
    int dimension() const { return static_cast<int>(counts_.size()) - 1; }
    bool empty() const { return counts_.empty(); }

    std::size_t cell_count(int d) const {
        return d >= 0 && d <= dimension() ? counts_[static_cast<std::size_t>(d)] : 0;
    }
    std::vector<std::size_t> cell_counts() const { return counts_; }

    std::span<const CellIndex> facets(int d, CellIndex c) const {
        if (d <= 0) return {};
        const auto k = 2 * static_cast<std::size_t>(d);
        return std::span<const CellIndex>(facets_[static_cast<std::size_t>(d)]).subspan(c * k, k);
    }

    CellIndex facet(int d, CellIndex c, int axis, Side side) const {
        return facets(d, c)[2 * static_cast<std::size_t>(axis) + static_cast<std::size_t>(side)];
    }

    // (d+1)-cells having c as a facet, ascending (with multiplicity if a
    // cube meets c twice, which never happens in configuration complexes).
    std::span<const CellIndex> cofacets(int d, CellIndex c) const {
        if (d < 0 || d >= dimension()) return {};
        const auto& off = cofacet_offsets_[static_cast<std::size_t>(d)];
        return std::span<const CellIndex>(cofacets_[static_cast<std::size_t>(d)]).subspan(off[c], off[c + 1] - off[c]);
    }

    // Corner selected by bit j of `mask` on axis j.
    CellIndex corner(int d, CellIndex c, std::uint32_t mask) const {
        for (int axis = d - 1; axis >= 0; --axis) {
            c = facet(axis + 1, c, axis, (mask >> axis) & 1u ? Side::high : Side::low);
        }
        return c;
    }

    std::vector<CellIndex> corners(int d, CellIndex c) const {
        std::vector<CellIndex> out;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) out.push_back(corner(d, c, mask));
        return out;
    }

    /// Cellular boundary d-cells -> (d-1)-cells. Axis j contributes
    /// (-1)^j (high - low).
    SparseIntMatrix boundary_matrix(int d) const {
        if (d < 1 || d > dimension())
            throw InvalidArgument("boundary degree " + std::to_string(d) + " out of range");
        SparseIntMatrix m(cell_count(d - 1), cell_count(d));
        for (CellIndex c = 0; c < cell_count(d); ++c) {
            auto f = facets(d, c);
            for (int axis = 0; axis < d; ++axis) {
                const long long sign = axis % 2 == 0 ? 1 : -1;
                m.add(f[2 * axis + 1], c, sign);
                m.add(f[2 * axis], c, -sign);
            }
        }
        m.finalize();
        return m;
    }

    /// Checks facet counts and the cubical identity: for axes a < b,
    /// face_a^s(face_b^t(c)) == face_{b-1}^t(face_a^s(c)).
    std::optional<std::string> validate() const {
        for (int d = 2; d <= dimension(); ++d)
            for (CellIndex c = 0; c < cell_count(d); ++c)
                for (int b = 0; b < d; ++b)
                    for (int a = 0; a < b; ++a)
                        for (auto s : {Side::low, Side::high})
                            for (auto t : {Side::low, Side::high}) {
                                auto x = facet(d - 1, facet(d, c, b, t), a, s);
                                auto y = facet(d - 1, facet(d, c, a, s), b - 1, t);
                                if (x != y)
                                    return "cube " + std::to_string(d) + ":" + std::to_string(c) +
                                           " violates the face identity on axes " + std::to_string(a) + "," +
                                           std::to_string(b);
                            }
        return std::nullopt;
    }

    bool operator==(const CubeComplex& o) const { return counts_ == o.counts_ && facets_ == o.facets_; }

private:
    void build_cofacets() {
        const auto top = counts_.size();
        cofacets_.assign(top > 0 ? top - 1 : 0, {});
        cofacet_offsets_.assign(cofacets_.size(), {});
        for (std::size_t d = 0; d + 1 < top; ++d) {
            auto& off = cofacet_offsets_[d];
            off.assign(counts_[d] + 1, 0);
            for (auto f : facets_[d + 1]) ++off[f + 1];
            for (std::size_t i = 0; i < counts_[d]; ++i) off[i + 1] += off[i];
            auto& co = cofacets_[d];
            co.resize(facets_[d + 1].size());
            auto fill = off;
            const auto k = 2 * (d + 1);
            for (std::size_t c = 0; c < counts_[d + 1]; ++c)
                for (std::size_t j = 0; j < k; ++j) co[fill[facets_[d + 1][c * k + j]]++] = static_cast<CellIndex>(c);
        }
    }

    std::vector<std::size_t> counts_;
    std::vector<std::vector<CellIndex>> facets_;
    std::vector<std::vector<CellIndex>> cofacets_;
    std::vector<std::vector<std::uint32_t>> cofacet_offsets_;
};

struct Components {
    std::uint32_t count = 0;
    // labels[d][c] for every cell; components numbered by least vertex.
    std::vector<std::vector<std::uint32_t>> labels;

    std::uint32_t of(int d, CellIndex c) const { return labels[static_cast<std::size_t>(d)][c]; }
};

/// Components of the 1-skeleton; higher cells inherit the label of a corner.
inline Components connected_components(const CubeComplex& x) {
    Components out;
    out.labels.resize(static_cast<std::size_t>(x.dimension() + 1));
    if (x.empty()) return out;
    detail::UnionFind uf(x.cell_count(0));
    for (CellIndex e = 0; e < x.cell_count(1); ++e) uf.unite(x.facet(1, e, 0, Side::low), x.facet(1, e, 0, Side::high));
    out.labels[0] = uf.labels(&out.count);
    for (int d = 1; d <= x.dimension(); ++d) {
        auto& lab = out.labels[static_cast<std::size_t>(d)];
        lab.resize(x.cell_count(d));
        for (CellIndex c = 0; c < x.cell_count(d); ++c) lab[c] = out.labels[0][x.corner(d, c, 0)];
    }
    return out;
}

/// A face-closed selection of cells renumbered densely, with maps back.
struct Subcomplex {
    CubeComplex complex;
    std::vector<std::vector<CellIndex>> to_parent; // per dimension
};

// keep[d][c] must be closed under taking facets.
inline Subcomplex subcomplex(const CubeComplex& x, const std::vector<std::vector<bool>>& keep) {
    Subcomplex out;
    const int top = x.dimension();
    std::vector<std::vector<CellIndex>> to_child(static_cast<std::size_t>(top + 1));
    out.to_parent.resize(static_cast<std::size_t>(top + 1));
    std::vector<std::size_t> counts(static_cast<std::size_t>(top + 1), 0);
    std::vector<std::vector<CellIndex>> facets(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        to_child[ud].assign(x.cell_count(d), UINT32_MAX);
        for (CellIndex c = 0; c < x.cell_count(d); ++c) {
            if (!keep[ud][c]) continue;
            to_child[ud][c] = static_cast<CellIndex>(out.to_parent[ud].size());
            out.to_parent[ud].push_back(c);
            for (auto f : x.facets(d, c)) {
                const auto child = to_child[ud - 1][f];
                if (child == UINT32_MAX) throw InvalidArgument("subcomplex selection is not closed under faces");
                facets[ud].push_back(child);
            }
        }
        counts[ud] = out.to_parent[ud].size();
    }
    out.complex = CubeComplex(std::move(counts), std::move(facets));
    out.to_parent.resize(static_cast<std::size_t>(out.complex.dimension() + 1));
    return out;
}

inline Subcomplex component_subcomplex(const CubeComplex& x, const Components& comps, std::uint32_t component) {
    if (component >= comps.count) throw InvalidArgument("invalid component " + std::to_string(component));
    std::vector<std::vector<bool>> keep(static_cast<std::size_t>(x.dimension() + 1));
    for (int d = 0; d <= x.dimension(); ++d) {
        auto& k = keep[static_cast<std::size_t>(d)];
        k.resize(x.cell_count(d));
        for (CellIndex c = 0; c < x.cell_count(d); ++c) k[c] = comps.of(d, c) == component;
    }
    return subcomplex(x, keep);
}

/// Every cube containing (d, c) as a face, grouped by dimension (index 0 is
/// (d, c) itself, index k the (d+k)-cubes), each list ascending.
inline std::vector<std::vector<CellIndex>> star(const CubeComplex& x, int d, CellIndex c) {
    std::vector<std::vector<CellIndex>> levels{{c}};
    for (int k = d; k < x.dimension(); ++k) {
        std::vector<CellIndex> next;
        for (auto cell : levels.back())
            for (auto up : x.cofacets(k, cell)) next.push_back(up);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }
    return levels;
}

/// Link of a cell from face incidence alone.
///
/// Vertices are the (d+1)-cubes having (d, c) as a facet (ascending, so link
/// vertex i is cofacets(d, c)[i] after deduplication). Each (d+k)-cube
/// containing the cell spans the simplex of its (d+1)-faces that contain the
/// cell. Assumes cubes are embedded, which holds for configuration complexes.
struct PosetLink {
    SimplicialComplex complex;
    std::vector<CellIndex> vertex_cells; // the (d+1)-cubes, ascending
};

inline PosetLink poset_link(const CubeComplex& x, int d, CellIndex c) {
    if (d < 0 || d > x.dimension() || c >= x.cell_count(d)) throw InvalidArgument("cell not in complex");
    PosetLink out;
    auto co = x.cofacets(d, c);
    out.vertex_cells.assign(co.begin(), co.end());
    std::sort(out.vertex_cells.begin(), out.vertex_cells.end());
    out.vertex_cells.erase(std::unique(out.vertex_cells.begin(), out.vertex_cells.end()), out.vertex_cells.end());

    std::vector<Simplex> simplices;
    std::map<CellIndex, Simplex> current;
    for (std::uint32_t i = 0; i < out.vertex_cells.size(); ++i) current[out.vertex_cells[i]] = {i};
    for (int k = d + 1; !current.empty(); ++k) {
        std::map<CellIndex, Simplex> next;
        for (auto& [cell, span] : current) {
            simplices.push_back(span);
            for (auto up : x.cofacets(k, cell)) {
                auto& s = next[up];
                s.insert(s.end(), span.begin(), span.end());
            }
        }
        for (auto& [cell, s] : next) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        current = std::move(next);
    }
    out.complex = SimplicialComplex::closure(out.vertex_cells.size(), simplices);
    return out;
}

/// Link of a 0-cell: one vertex per incident edge; a set of edges spans a
/// simplex iff some cube contains the vertex with exactly those edges there.
inline SimplicialComplex vertex_link(const CubeComplex& x, CellIndex v) {
    if (v >= x.cell_count(0)) throw InvalidArgument("not a 0-cell: " + std::to_string(v));
    return poset_link(x, 0, v).complex;
}

} // namespace graphconf
