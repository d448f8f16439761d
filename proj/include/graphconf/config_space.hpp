#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphconf/colored_graph.hpp"
#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/parallel.hpp"
#include "graphconf/morphism.hpp"

namespace graphconf {

/// True iff the closed cells have pairwise disjoint color sets.
inline bool color_disjoint(const ColoredGraph& g, std::span<const Cell> cells) {
    std::vector<std::uint32_t> colors;
    for (auto c : cells) {
        auto cc = g.closed_colors(g.code(c));
        colors.insert(colors.end(), cc.begin(), cc.end());
    }
    std::sort(colors.begin(), colors.end());
    return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

/// True iff the closed cells are pairwise disjoint as vertex sets, ignoring colors.
inline bool vertex_disjoint(const ColoredGraph& g, std::span<const Cell> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            for (auto a : g.boundary_vertices(cells[i]))
                for (auto b : g.boundary_vertices(cells[j]))
                    if (a == b) return false;
    return true;
}

struct BuildOptions {
    unsigned threads = 1;
};

/// The discretized configuration space C_n or UC_n of a colored graph.
///
/// Cells are n-tuples of graph cells (stored as cell codes), pairwise
/// color-disjoint; the dimension of a tuple is its number of edge factors.
/// Within each dimension tuples are sorted lexicographically by code. In the
/// unordered space each orbit is represented by its sorted tuple, which is
/// its least member. The cube structure is in complex(): the facets of a cube
/// are taken axis by axis over its edge factors in position order, tail face
/// first.
class ConfigSpace {
public:
    const ColoredGraph& graph() const { return *graph_; }
    const std::shared_ptr<const ColoredGraph>& graph_ptr() const { return graph_; }
    int tokens() const { return n_; }
    bool ordered() const { return ordered_; }
    const CubeComplex& complex() const { return complex_; }
    int dimension() const { return complex_.dimension(); }
    std::size_t cell_count(int d) const { return complex_.cell_count(d); }
    std::vector<std::size_t> cell_counts() const { return complex_.cell_counts(); }

    std::span<const CellCode> codes(int d, CellIndex c) const {
        const auto n = static_cast<std::size_t>(n_);
        return std::span<const CellCode>(codes_[static_cast<std::size_t>(d)]).subspan(c * n, n);
    }

    std::vector<Cell> factors(int d, CellIndex c) const {
        std::vector<Cell> out;
        for (auto code : codes(d, c)) out.push_back(graph_->cell(code));
        return out;
    }

    // "(v0,e3)"
    std::string describe(int d, CellIndex c) const {
        std::string s = "(";
        bool first = true;
        for (auto f : factors(d, c)) {
            if (!first) s += ",";
            s += to_string(f);
            first = false;
        }
        return s + ")";
    }

    /// Index of the cube with these factor codes, if admissible. Unordered
    /// spaces accept any permutation.
    std::optional<CubeRef> locate_codes(std::vector<CellCode> tuple) const {
        if (tuple.size() != static_cast<std::size_t>(n_)) return std::nullopt;
        if (!ordered_) std::sort(tuple.begin(), tuple.end());
        int d = 0;
        for (auto code : tuple) {
            if (code >= graph_->cell_count()) return std::nullopt;
            if (graph_->is_edge_code(code)) ++d;
        }
        auto idx = search(d, tuple);
        if (!idx) return std::nullopt;
        return CubeRef{d, *idx};
    }

    std::optional<CubeRef> locate(std::span<const Cell> cells) const {
        std::vector<CellCode> tuple;
        for (auto c : cells) {
            if (!graph_->contains(c)) return std::nullopt;
            tuple.push_back(graph_->code(c));
        }
        return locate_codes(std::move(tuple));
    }

    // 0-cell holding tokens at these vertices.
    std::optional<CellIndex> find_vertex(std::span<const VertexId> config) const {
        std::vector<CellCode> tuple(config.begin(), config.end());
        for (auto v : tuple)
            if (v >= graph_->vertex_count()) return std::nullopt;
        auto r = locate_codes(std::move(tuple));
        if (!r) return std::nullopt;
        return r->index;
    }

    bool operator==(const ConfigSpace& o) const {
        return *graph_ == *o.graph_ && n_ == o.n_ && ordered_ == o.ordered_ && codes_ == o.codes_ &&
               complex_ == o.complex_;
    }

private:
    friend ConfigSpace build_space(std::shared_ptr<const ColoredGraph>, int, bool, BuildOptions);

    std::optional<CellIndex> search(int d, std::span<const CellCode> tuple) const {
        if (d < 0 || static_cast<std::size_t>(d) >= codes_.size()) return std::nullopt;
        const auto& flat = codes_[static_cast<std::size_t>(d)];
        const auto n = static_cast<std::size_t>(n_);
        std::size_t lo = 0, hi = flat.size() / n;
        while (lo < hi) {
            const auto mid = (lo + hi) / 2;
            const auto* row = flat.data() + mid * n;
            if (std::lexicographical_compare(row, row + n, tuple.begin(), tuple.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < flat.size() / n && std::equal(tuple.begin(), tuple.end(), flat.data() + lo * n))
            return static_cast<CellIndex>(lo);
        return std::nullopt;
    }

    std::shared_ptr<const ColoredGraph> graph_;
    int n_ = 0;
    bool ordered_ = true;
    std::vector<std::vector<CellCode>> codes_; // per dimension, n codes per cube
    CubeComplex complex_;
};

namespace detail {

// Backtracking enumeration of admissible tuples whose first factor lies in
// [first_begin, first_end). A partial tuple that already repeats a color is
// never extended. Output per dimension, in lexicographic order.
class TupleEnumerator {
public:
    TupleEnumerator(const ColoredGraph& g, int n, bool ordered)
        : g_(g), n_(static_cast<std::size_t>(n)), ordered_(ordered), used_(g.color_class_count(), 0), tuple_(n_) {}

    std::vector<std::vector<CellCode>> run(CellCode first_begin, CellCode first_end) {
        out_.assign(n_ + 1, {});
        first_begin_ = first_begin;
        first_end_ = first_end;
        extend(0, 0);
        while (!out_.empty() && out_.back().empty()) out_.pop_back();
        return std::move(out_);
    }

private:
    void extend(std::size_t pos, std::size_t dim) {
        if (pos == n_) {
            auto& layer = out_[dim];
            layer.insert(layer.end(), tuple_.begin(), tuple_.end());
            return;
        }
        const auto total = static_cast<CellCode>(g_.cell_count());
        CellCode lo = pos == 0 ? first_begin_ : (ordered_ ? 0 : tuple_[pos - 1] + 1);
        CellCode hi = pos == 0 ? first_end_ : total;
        for (CellCode code = lo; code < hi; ++code) {
            auto cc = g_.closed_colors(code);
            if (used_[cc[0]] || (cc.size() > 1 && used_[cc[1]])) continue;
            for (auto c : cc) used_[c] = 1;
            tuple_[pos] = code;
            extend(pos + 1, dim + (g_.is_edge_code(code) ? 1 : 0));
            for (auto c : cc) used_[c] = 0;
        }
    }

    const ColoredGraph& g_;
    std::size_t n_;
    bool ordered_;
    std::vector<std::uint8_t> used_;
    std::vector<CellCode> tuple_;
    CellCode first_begin_ = 0, first_end_ = 0;
    std::vector<std::vector<CellCode>> out_;
};

} // namespace detail

inline ConfigSpace build_space(std::shared_ptr<const ColoredGraph> graph, int n, bool ordered, BuildOptions options) {
    if (!graph) throw InvalidArgument("no graph");
    if (n < 1) throw InvalidArgument("the number of tokens must be at least 1");
    const auto& g = *graph;
    const auto un = static_cast<std::size_t>(n);
    const auto total = g.cell_count();
    const std::size_t chunks = options.threads <= 1 ? 1 : std::min<std::size_t>(total, 4 * options.threads);

    // Merge-then-concatenate by chunk index keeps the canonical order.
    std::vector<std::vector<std::vector<CellCode>>> parts(std::max<std::size_t>(chunks, 1));
    detail::for_each_chunk(total, chunks, options.threads, [&](std::size_t b, std::size_t e, std::size_t k) {
        detail::TupleEnumerator en(g, n, ordered);
        parts[k] = en.run(static_cast<CellCode>(b), static_cast<CellCode>(e));
    });
    std::vector<std::vector<CellCode>> codes;
    for (auto& part : parts) {
        if (part.size() > codes.size()) codes.resize(part.size());
        for (std::size_t d = 0; d < part.size(); ++d) codes[d].insert(codes[d].end(), part[d].begin(), part[d].end());
    }

    ConfigSpace space;
    space.graph_ = graph;
    space.n_ = n;
    space.ordered_ = ordered;
    space.codes_ = std::move(codes);

    std::vector<std::size_t> counts;
    for (const auto& layer : space.codes_) counts.push_back(layer.size() / un);
    std::vector<std::vector<CellIndex>> facets(counts.size());
    const auto nv = static_cast<CellCode>(g.vertex_count());
    for (std::size_t d = 1; d < counts.size(); ++d) {
        auto& out = facets[d];
        out.resize(counts[d] * 2 * d);
        detail::for_each_chunk(counts[d], chunks, options.threads, [&](std::size_t b, std::size_t e, std::size_t) {
            std::vector<CellCode> face(un);
            for (std::size_t c = b; c < e; ++c) {
                auto tuple = space.codes(static_cast<int>(d), static_cast<CellIndex>(c));
                std::size_t slot = c * 2 * d;
                for (std::size_t p = 0; p < un; ++p) {
                    if (tuple[p] < nv) continue;
                    const auto& edge = g.edge(tuple[p] - nv);
                    for (auto end : {edge.tail, edge.head}) {
                        std::copy(tuple.begin(), tuple.end(), face.begin());
                        face[p] = end;
                        if (!ordered) std::sort(face.begin(), face.end());
                        auto idx = space.search(static_cast<int>(d - 1), face);
                        if (!idx) throw Error("internal: face missing from configuration complex");
                        out[slot++] = *idx;
                    }
                }
            }
        });
    }
    space.complex_ = CubeComplex(std::move(counts), std::move(facets));
    return space;
}

/// C_n(Γ): admissible ordered n-tuples.
inline ConfigSpace build_ordered(std::shared_ptr<const ColoredGraph> g, int n, BuildOptions options = {}) {
    return build_space(std::move(g), n, true, options);
}
inline ConfigSpace build_ordered(const ColoredGraph& g, int n, BuildOptions options = {}) {
    return build_ordered(std::make_shared<const ColoredGraph>(g), n, options);
}

/// UC_n(Γ): orbits of the free coordinate-permutation action, one sorted
/// representative each.
inline ConfigSpace build_unordered(std::shared_ptr<const ColoredGraph> g, int n, BuildOptions options = {}) {
    return build_space(std::move(g), n, false, options);
}
inline ConfigSpace build_unordered(const ColoredGraph& g, int n, BuildOptions options = {}) {
    return build_unordered(std::make_shared<const ColoredGraph>(g), n, options);
}

// Cheap upper bound on the cell count: distinct-cell tuples, divided by n!
// when unordered.
inline double estimated_cell_bound(const ColoredGraph& g, int n, bool ordered) {
    double bound = 1.0;
    const double cells = static_cast<double>(g.cell_count());
    for (int i = 0; i < n; ++i) bound *= std::max(0.0, cells - i);
    if (!ordered)
        for (int i = 2; i <= n; ++i) bound /= i;
    return bound;
}

/// One vertex of a growth-move link: grow factor `position` (a vertex) along
/// `edge`, giving the coface `coface` of dimension d+1.
struct GrowthMove {
    std::uint32_t position = 0;
    EdgeId edge = 0;
    CellIndex coface = 0;
    bool operator==(const GrowthMove&) const = default;
};

struct CellLink {
    SimplicialComplex complex;
    std::vector<GrowthMove> moves; // link vertex i is moves[i]
};

/// Link of a configuration cube from growth moves.
///
/// A move replaces a vertex factor by an incident edge that stays
/// color-disjoint from every other factor. A set of moves spans a simplex iff
/// the positions are distinct and the new edges are pairwise color-disjoint,
/// i.e. the fully grown tuple is admissible.
inline CellLink cell_link(const ConfigSpace& space, int d, CellIndex c) {
    if (d < 0 || d > space.dimension() || c >= space.cell_count(d)) throw InvalidArgument("cell not in complex");
    const auto& g = space.graph();
    const auto tuple = space.codes(d, c);
    const auto n = tuple.size();

    std::vector<std::uint32_t> used(g.color_class_count(), 0);
    for (auto code : tuple)
        for (auto col : g.closed_colors(code)) ++used[col];

    CellLink out;
    std::vector<CellCode> grown(tuple.begin(), tuple.end());
    for (std::uint32_t p = 0; p < n; ++p) {
        if (g.is_edge_code(tuple[p])) continue;
        const auto v = tuple[p];
        --used[g.color_class(v)];
        for (auto e : g.incident_edges(v)) {
            const auto ecode = static_cast<CellCode>(g.vertex_count() + e);
            bool ok = true;
            for (auto col : g.closed_colors(ecode)) ok = ok && used[col] == 0;
            if (!ok) continue;
            grown[p] = ecode;
            auto ref = space.locate_codes(grown);
            if (!ref) throw Error("internal: growth move leaves the complex");
            out.moves.push_back({p, e, ref->index});
        }
        grown[p] = tuple[p];
        ++used[g.color_class(v)];
    }

    std::vector<Simplex> simplices;
    Simplex current;
    std::vector<std::uint32_t> taken(g.color_class_count(), 0);
    std::vector<std::uint8_t> pos_used(n, 0);
    auto edge_colors = [&](std::uint32_t i) {
        return g.closed_colors(static_cast<CellCode>(g.vertex_count() + out.moves[i].edge));
    };
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (!current.empty()) simplices.push_back(current);
        for (std::uint32_t i = start; i < out.moves.size(); ++i) {
            const auto& m = out.moves[i];
            if (pos_used[m.position]) continue;
            bool ok = true;
            for (auto col : edge_colors(i)) ok = ok && taken[col] == 0;
            if (!ok) continue;
            pos_used[m.position] = 1;
            for (auto col : edge_colors(i)) ++taken[col];
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
            for (auto col : edge_colors(i)) --taken[col];
            pos_used[m.position] = 0;
        }
    };
    rec(rec, 0);
    out.complex = SimplicialComplex::closure(out.moves.size(), simplices);
    return out;
}

/// The cellular map f^n induced factorwise by a graph morphism.
struct CellularMap {
    std::shared_ptr<const ConfigSpace> source;
    std::shared_ptr<const ConfigSpace> target;
    std::vector<std::vector<CellIndex>> image; // per dimension

    CellIndex apply(int d, CellIndex c) const { return image[static_cast<std::size_t>(d)][c]; }
};

inline CellularMap induced_map(const GraphMorphism& f, std::shared_ptr<const ConfigSpace> source,
                               std::shared_ptr<const ConfigSpace> target) {
    if (!(source->graph() == f.domain()) || !(target->graph() == f.codomain()))
        throw InvalidArgument("configuration spaces do not match the morphism");
    if (source->tokens() != target->tokens() || source->ordered() != target->ordered())
        throw InvalidArgument("configuration spaces have different shapes");
    CellularMap map{source, target, {}};
    map.image.resize(static_cast<std::size_t>(source->dimension() + 1));
    std::vector<CellCode> mapped;
    for (int d = 0; d <= source->dimension(); ++d) {
        auto& img = map.image[static_cast<std::size_t>(d)];
        img.resize(source->cell_count(d));
        for (CellIndex c = 0; c < source->cell_count(d); ++c) {
            mapped.clear();
            for (auto code : source->codes(d, c)) mapped.push_back(f.map_code(code));
            auto ref = target->locate_codes(mapped);
            if (!ref || ref->dim != d)
                throw InvalidArgument("morphism does not preserve color-disjointness at " + source->describe(d, c));
            img[c] = ref->index;
        }
    }
    return map;
}

inline CellularMap induced_map(const GraphMorphism& f, int n, bool ordered = true, BuildOptions options = {}) {
    auto source = std::make_shared<const ConfigSpace>(build_space(f.domain_ptr(), n, ordered, options));
    auto target = std::make_shared<const ConfigSpace>(build_space(f.codomain_ptr(), n, ordered, options));
    return induced_map(f, std::move(source), std::move(target));
}

// outer ∘ inner on cells.
inline CellularMap compose(const CellularMap& outer, const CellularMap& inner) {
    if (!(*inner.target == *outer.source)) throw InvalidArgument("cellular maps are not composable");
    CellularMap out{inner.source, outer.target, inner.image};
    for (std::size_t d = 0; d < out.image.size(); ++d)
        for (auto& c : out.image[d]) c = outer.image[d][c];
    return out;
}

/// Checks that the image of every facet is a facet of the image. For ordered
/// spaces the axis must match and the side flips with the edge's orientation.
inline std::optional<std::string> check_face_compatibility(const CellularMap& map, const GraphMorphism& f) {
    const auto& src = *map.source;
    const auto& dst = *map.target;
    for (int d = 1; d <= src.dimension(); ++d)
        for (CellIndex c = 0; c < src.cell_count(d); ++c) {
            const auto img = map.apply(d, c);
            std::vector<CellIndex> mapped;
            for (auto fc : src.complex().facets(d, c)) mapped.push_back(map.apply(d - 1, fc));
            auto expect = dst.complex().facets(d, img);
            if (src.ordered()) {
                int axis = 0;
                for (auto code : src.codes(d, c)) {
                    if (!src.graph().is_edge_code(code)) continue;
                    const bool flip =
                        f.map_edge(static_cast<EdgeId>(code - src.graph().vertex_count())).flip;
                    const auto a = static_cast<std::size_t>(axis);
                    if (mapped[2 * a] != expect[2 * a + (flip ? 1 : 0)] ||
                        mapped[2 * a + 1] != expect[2 * a + (flip ? 0 : 1)])
                        return "facet mismatch at " + src.describe(d, c);
                    ++axis;
                }
            } else {
                std::vector<CellIndex> want(expect.begin(), expect.end());
                std::sort(mapped.begin(), mapped.end());
                std::sort(want.begin(), want.end());
                if (mapped != want) return "facet mismatch at " + src.describe(d, c);
            }
        }
    return std::nullopt;
}

struct PropertyCheck {
    std::string name;
    bool premise = false; // f has the property
    bool holds = false;   // f^n has the property
    std::string witness;  // set when holds is false

    bool passed() const { return !premise || holds; }
};

struct InducedReport {
    MorphismClass graph_class;
    int tokens = 0;
    std::vector<PropertyCheck> checks;
    std::optional<std::size_t> expected_fiber; // k^n for a k-fold cover
    std::size_t min_fiber = 0;
    std::size_t max_fiber = 0;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
    }
};

/// Verifies on the cell data that injectivity, immersion, covering and
/// surjectivity of f carry over to f^n, and that a k-fold cover gives fibers
/// of size k^n over every target vertex.
inline InducedReport verify_induced_properties(const GraphMorphism& f, const CellularMap& map) {
    const auto& src = *map.source;
    const auto& dst = *map.target;
    InducedReport rep;
    rep.graph_class = classify_morphism(f);
    rep.tokens = src.tokens();

    std::vector<std::vector<std::size_t>> hits(static_cast<std::size_t>(dst.dimension() + 1));
    for (int d = 0; d <= dst.dimension(); ++d) hits[static_cast<std::size_t>(d)].assign(dst.cell_count(d), 0);
    for (int d = 0; d <= src.dimension(); ++d)
        for (CellIndex c = 0; c < src.cell_count(d); ++c) ++hits[static_cast<std::size_t>(d)][map.apply(d, c)];

    PropertyCheck inj{"injective", rep.graph_class.injective, true, {}};
    PropertyCheck sur{"surjective", rep.graph_class.surjective, true, {}};
    for (int d = 0; d <= dst.dimension(); ++d)
        for (CellIndex c = 0; c < dst.cell_count(d); ++c) {
            const auto h = hits[static_cast<std::size_t>(d)][c];
            if (h > 1 && inj.holds) {
                inj.holds = false;
                inj.witness = dst.describe(d, c) + " has " + std::to_string(h) + " preimages";
            }
            if (h == 0 && sur.holds) {
                sur.holds = false;
                sur.witness = dst.describe(d, c) + " is not hit";
            }
        }

    PropertyCheck imm{"immersion", rep.graph_class.immersion, true, {}};
    PropertyCheck cov{"covering", rep.graph_class.covering, sur.holds, sur.holds ? "" : sur.witness};
    for (CellIndex x = 0; x < src.cell_count(0) && (imm.holds || cov.holds); ++x) {
        const auto up = star(src.complex(), 0, x);
        const auto down = star(dst.complex(), 0, map.apply(0, x));
        for (std::size_t k = 1; k < std::max(up.size(), down.size()); ++k) {
            std::vector<CellIndex> images;
            if (k < up.size())
                for (auto c : up[k]) images.push_back(map.apply(static_cast<int>(k), c));
            std::sort(images.begin(), images.end());
            const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
            const bool onto = k < down.size() ? images == down[k] : images.empty();
            if (!injective && imm.holds) {
                imm.holds = false;
                imm.witness = "star of " + src.describe(0, x) + " folds in dimension " + std::to_string(k);
            }
            if ((!injective || !onto) && cov.holds) {
                cov.holds = false;
                cov.witness = "star of " + src.describe(0, x) + " is not mapped bijectively in dimension " +
                              std::to_string(k);
            }
        }
    }

    rep.checks = {inj, imm, cov, sur};

    const auto& vh = hits.empty() ? std::vector<std::size_t>{} : hits[0];
    if (!vh.empty()) {
        rep.min_fiber = *std::min_element(vh.begin(), vh.end());
        rep.max_fiber = *std::max_element(vh.begin(), vh.end());
    }
    if (rep.graph_class.degree) {
        std::size_t expected = 1;
        for (int i = 0; i < src.tokens(); ++i) expected *= *rep.graph_class.degree;
        rep.expected_fiber = expected;
        PropertyCheck fib{"fiber size k^n", true, true, {}};
        for (CellIndex v = 0; v < vh.size(); ++v)
            if (vh[v] != expected) {
                fib.holds = false;
                fib.witness = dst.describe(0, v) + " has " + std::to_string(vh[v]) + " preimages, expected " +
                              std::to_string(expected);
                break;
            }
        rep.checks.push_back(fib);
    }
    return rep;
}

} // namespace graphconf
