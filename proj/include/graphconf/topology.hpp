#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/union_find.hpp"
#include "graphconf/simplicial_complex.hpp"
#include "graphconf/smith.hpp"

namespace graphconf {

inline long euler_characteristic(const CubeComplex& x) {
    long chi = 0;
    for (int d = 0; d <= x.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(x.cell_count(d));
    return chi;
}

struct HomologyProfile {
    std::vector<std::size_t> betti;          // b_0 .. b_dim
    std::vector<std::vector<BigInt>> torsion; // torsion coefficients of H_d, divisibility order

    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(betti[d]);
        return chi;
    }
    bool torsion_free() const {
        return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
    }
};

/// Integral homology from Smith normal forms of the cellular boundaries.
inline HomologyProfile homology(const CubeComplex& x) {
    HomologyProfile out;
    const int top = x.dimension();
    if (top < 0) return out;
    std::vector<SmithForm> snf(static_cast<std::size_t>(top + 2));
    for (int d = 1; d <= top; ++d) snf[static_cast<std::size_t>(d)] = smith_normal_form(x.boundary_matrix(d));
    for (int d = 0; d <= top; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        const auto cycles = x.cell_count(d) - snf[ud].rank;
        out.betti.push_back(cycles - snf[ud + 1].rank);
        out.torsion.push_back(snf[ud + 1].torsion());
    }
    return out;
}

// One word letter is ±(generator + 1).
using Word = std::vector<int>;

/// Finite group presentation read off a cube complex.
struct Presentation {
    std::size_t generators = 0;
    std::vector<CellIndex> generator_edges; // 1-cell behind each generator
    std::vector<Word> relators;
    CellIndex basepoint = 0;
};

struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
    bool operator==(const AbelianGroup&) const = default;
};

inline AbelianGroup abelianization(const Presentation& p) {
    SparseIntMatrix m(p.relators.size(), p.generators);
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r]) m.add(r, static_cast<std::size_t>(std::abs(letter) - 1), letter > 0 ? 1 : -1);
    m.finalize();
    const auto snf = smith_normal_form(m);
    return {p.generators - snf.rank, snf.torsion()};
}

inline void free_reduce(Word& w) {
    Word out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.pop_back();
        out.erase(out.begin());
    }
    w = std::move(out);
}

/// Removes relators of length at most two by Tietze moves: empty relators are
/// dropped, x = 1 deletes x, and x^a y^b = 1 (x != y) substitutes y away.
/// Generators eliminated this way are removed and the rest renumbered.
inline Presentation simplify(Presentation p) {
    std::vector<std::optional<Word>> subst(p.generators); // replacement word per eliminated generator
    auto rewrite = [&](Word& w) {
        Word out;
        for (int letter : w) {
            const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
            if (!subst[g]) {
                out.push_back(letter);
                continue;
            }
            const Word& rep = *subst[g];
            if (letter > 0)
                out.insert(out.end(), rep.begin(), rep.end());
            else
                for (auto it = rep.rbegin(); it != rep.rend(); ++it) out.push_back(-*it);
        }
        w = std::move(out);
        free_reduce(w);
    };
    for (;;) {
        for (auto& r : p.relators) free_reduce(r);
        std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
        auto it = std::find_if(p.relators.begin(), p.relators.end(), [](const Word& w) {
            return w.size() == 1 || (w.size() == 2 && std::abs(w[0]) != std::abs(w[1]));
        });
        if (it == p.relators.end()) break;
        const Word r = *it;
        p.relators.erase(it);
        if (r.size() == 1) {
            subst[static_cast<std::size_t>(std::abs(r[0]) - 1)] = Word{};
        } else {
            // x^a y^b = 1  =>  y = x^(-a*b)
            const int a = r[0] > 0 ? 1 : -1;
            const int b = r[1] > 0 ? 1 : -1;
            const int x = std::abs(r[0]);
            subst[static_cast<std::size_t>(std::abs(r[1]) - 1)] = Word{-a * b * x};
        }
        for (auto& w : p.relators) rewrite(w);
        // earlier substitutions may mention the generator just eliminated
        for (auto& s : subst)
            if (s) rewrite(*s);
    }
    std::vector<int> renumber(p.generators, 0);
    Presentation out;
    out.basepoint = p.basepoint;
    for (std::size_t g = 0; g < p.generators; ++g)
        if (!subst[g]) {
            renumber[g] = static_cast<int>(++out.generators);
            out.generator_edges.push_back(p.generator_edges[g]);
        }
    for (auto& w : p.relators) {
        Word nw;
        for (int letter : w) nw.push_back((letter > 0 ? 1 : -1) * renumber[static_cast<std::size_t>(std::abs(letter) - 1)]);
        out.relators.push_back(std::move(nw));
    }
    return out;
}

/// π1 of one component: breadth-first spanning tree from the least vertex,
/// one generator per non-tree edge, one relator per square. Higher cubes do
/// not affect π1.
inline Presentation pi1_presentation(const CubeComplex& x, const Components& comps, std::uint32_t component) {
    if (component >= comps.count) throw InvalidArgument("invalid component " + std::to_string(component));
    Presentation p;
    const auto nv = x.cell_count(0);
    const auto ne = x.cell_count(1);
    CellIndex root = 0;
    while (comps.of(0, root) != component) ++root;
    p.basepoint = root;

    std::vector<std::vector<std::pair<CellIndex, CellIndex>>> adj(nv); // (edge, other vertex)
    for (CellIndex e = 0; e < ne; ++e) {
        const auto a = x.facet(1, e, 0, Side::low);
        const auto b = x.facet(1, e, 0, Side::high);
        adj[a].push_back({e, b});
        adj[b].push_back({e, a});
    }
    std::vector<std::uint8_t> tree(ne, 0), seen(nv, 0);
    std::deque<CellIndex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto [e, w] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                tree[e] = 1;
                queue.push_back(w);
            }
    }
    std::vector<int> gen(ne, 0);
    for (CellIndex e = 0; e < ne; ++e)
        if (!tree[e] && comps.of(1, e) == component) {
            gen[e] = static_cast<int>(++p.generators);
            p.generator_edges.push_back(e);
        }
    for (CellIndex s = 0; s < x.cell_count(2); ++s) {
        if (comps.of(2, s) != component) continue;
        // corners 00 -> 10 -> 11 -> 01 -> 00
        const std::pair<CellIndex, int> path[4] = {{x.facet(2, s, 1, Side::low), 1},
                                                   {x.facet(2, s, 0, Side::high), 1},
                                                   {x.facet(2, s, 1, Side::high), -1},
                                                   {x.facet(2, s, 0, Side::low), -1}};
        Word w;
        for (auto [e, dir] : path)
            if (gen[e]) w.push_back(dir * gen[e]);
        p.relators.push_back(std::move(w));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Closed-surface recognition
// ---------------------------------------------------------------------------

/// A 2-dimensional polygonal complex: faces are cyclic edge paths, each edge
/// with a traversal sign (+1 tail to head).
struct PolygonalComplex {
    std::size_t vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // (tail, head)
    std::vector<std::vector<std::pair<std::uint32_t, int>>> faces;
};

struct SurfaceClassification {
    bool closed_surface = false;
    bool orientable = false;
    bool connected = false;
    long euler = 0;
    int genus = 0;     // orientable case
    int crosscaps = 0; // non-orientable case
    // Set when closed_surface is false.
    std::string witness;
};

namespace detail {

enum class SurfaceDefect { none, edge, vertex };

struct SurfaceCore {
    SurfaceClassification result;
    SurfaceDefect defect = SurfaceDefect::none;
    std::uint32_t defect_index = 0;
    std::size_t defect_count = 0; // faces at the edge
};

inline SurfaceCore classify_polygonal(const PolygonalComplex& pc) {
    SurfaceCore core;
    auto& r = core.result;
    r.euler = static_cast<long>(pc.vertices) - static_cast<long>(pc.edges.size()) + static_cast<long>(pc.faces.size());

    std::vector<std::vector<std::pair<std::uint32_t, int>>> uses(pc.edges.size()); // (face, sign)
    for (std::uint32_t f = 0; f < pc.faces.size(); ++f)
        for (auto [e, s] : pc.faces[f]) uses[e].push_back({f, s});
    for (std::uint32_t e = 0; e < pc.edges.size(); ++e)
        if (uses[e].size() != 2) {
            core.defect = SurfaceDefect::edge;
            core.defect_index = e;
            core.defect_count = uses[e].size();
            return core;
        }

    // Vertex links: link vertices are edge ends (2e tail, 2e+1 head), so a
    // loop contributes two; link edges are face corners.
    std::vector<std::vector<std::uint32_t>> incident(pc.vertices);
    for (std::uint32_t e = 0; e < pc.edges.size(); ++e) {
        incident[pc.edges[e].first].push_back(2 * e);
        incident[pc.edges[e].second].push_back(2 * e + 1);
    }
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> corners(pc.vertices);
    for (const auto& face : pc.faces)
        for (std::size_t i = 0; i < face.size(); ++i) {
            const auto [e, s] = face[i];
            const auto [e2, s2] = face[(i + 1) % face.size()];
            const std::uint32_t arrive = 2 * e + (s > 0 ? 1 : 0), leave = 2 * e2 + (s2 > 0 ? 0 : 1);
            const auto at = s > 0 ? pc.edges[e].second : pc.edges[e].first;
            corners[at].push_back({arrive, leave});
        }
    std::vector<std::uint32_t> local(2 * pc.edges.size(), UINT32_MAX);
    for (std::uint32_t v = 0; v < pc.vertices; ++v) {
        const auto& inc = incident[v];
        bool circle = !inc.empty();
        if (circle) {
            for (std::uint32_t i = 0; i < inc.size(); ++i) local[inc[i]] = i;
            std::vector<int> degree(inc.size(), 0);
            UnionFind uf(inc.size());
            for (auto [a, b] : corners[v]) {
                ++degree[local[a]];
                ++degree[local[b]];
                uf.unite(local[a], local[b]);
            }
            std::uint32_t parts = 0;
            uf.labels(&parts);
            circle = parts == 1 && std::all_of(degree.begin(), degree.end(), [](int k) { return k == 2; });
        }
        if (!circle) {
            core.defect = SurfaceDefect::vertex;
            core.defect_index = v;
            return core;
        }
    }

    r.closed_surface = true;
    UnionFind uf(pc.vertices);
    for (const auto& [a, b] : pc.edges) uf.unite(a, b);
    std::uint32_t parts = 0;
    uf.labels(&parts);
    r.connected = parts == 1;

    // Orientation propagation: faces sharing an edge must induce opposite signs on it.
    std::vector<int> orient(pc.faces.size(), 0);
    bool orientable = true;
    for (std::uint32_t start = 0; start < pc.faces.size() && orientable; ++start) {
        if (orient[start]) continue;
        orient[start] = 1;
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty() && orientable) {
            const auto f = queue.front();
            queue.pop_front();
            for (auto [e, s] : pc.faces[f]) {
                const auto& u = uses[e];
                const auto [g, t] = u[0] == std::pair{f, s} ? u[1] : u[0]; // the other occurrence
                const int want = -orient[f] * s * t;
                if (!orient[g]) {
                    orient[g] = want;
                    queue.push_back(g);
                } else if (orient[g] != want) {
                    orientable = false;
                }
            }
        }
    }
    r.orientable = orientable;
    if (r.connected) {
        if (orientable)
            r.genus = static_cast<int>((2 - r.euler) / 2);
        else
            r.crosscaps = static_cast<int>(2 - r.euler);
    }
    return core;
}

} // namespace detail

/// Closed-surface test for one component of a cube complex: every edge in
/// exactly two squares, every vertex link a single circle, no cubes above
/// dimension two. Orientability by propagating square orientations.
inline SurfaceClassification surface_classify(const CubeComplex& x, const Components& comps, std::uint32_t component) {
    if (component >= comps.count) throw InvalidArgument("invalid component " + std::to_string(component));
    for (int d = 3; d <= x.dimension(); ++d)
        for (CellIndex c = 0; c < x.cell_count(d); ++c)
            if (comps.of(d, c) == component) {
                SurfaceClassification r;
                r.witness = "cell " + std::to_string(d) + ":" + std::to_string(c) + " has dimension above two";
                return r;
            }
    auto sub = component_subcomplex(x, comps, component);
    const auto& s = sub.complex;
    PolygonalComplex pc;
    pc.vertices = s.cell_count(0);
    for (CellIndex e = 0; e < s.cell_count(1); ++e)
        pc.edges.push_back({s.facet(1, e, 0, Side::low), s.facet(1, e, 0, Side::high)});
    for (CellIndex q = 0; q < s.cell_count(2); ++q)
        pc.faces.push_back({{s.facet(2, q, 1, Side::low), 1},
                            {s.facet(2, q, 0, Side::high), 1},
                            {s.facet(2, q, 1, Side::high), -1},
                            {s.facet(2, q, 0, Side::low), -1}});
    auto core = detail::classify_polygonal(pc);
    auto r = core.result;
    if (core.defect == detail::SurfaceDefect::edge)
        r.witness = "edge " + std::to_string(sub.to_parent[1][core.defect_index]) + " lies in " +
                    std::to_string(core.defect_count) + " squares";
    else if (core.defect == detail::SurfaceDefect::vertex)
        r.witness = "vertex " + std::to_string(sub.to_parent[0][core.defect_index]) + " has a link that is not a circle";
    return r;
}

/// Closed-surface test for a triangulated surface given as a simplicial complex.
inline SurfaceClassification classify_surface(const SimplicialComplex& k) {
    SurfaceClassification r;
    if (k.dimension() != 2) {
        r.euler = k.euler_characteristic();
        r.witness = "complex has dimension " + std::to_string(k.dimension());
        return r;
    }
    PolygonalComplex pc;
    pc.vertices = k.vertex_count();
    auto edges = k.faces(1);
    for (const auto& e : edges) pc.edges.push_back({e[0], e[1]});
    auto edge_id = [&](std::uint32_t a, std::uint32_t b) {
        Simplex s{std::min(a, b), std::max(a, b)};
        return static_cast<std::uint32_t>(std::lower_bound(edges.begin(), edges.end(), s) - edges.begin());
    };
    for (const auto& t : k.faces(2))
        pc.faces.push_back({{edge_id(t[0], t[1]), 1}, {edge_id(t[1], t[2]), 1}, {edge_id(t[0], t[2]), -1}});
    auto core = detail::classify_polygonal(pc);
    r = core.result;
    if (core.defect == detail::SurfaceDefect::edge)
        r.witness = "link edge " + std::to_string(core.defect_index) + " lies in " + std::to_string(core.defect_count) +
                    " triangles";
    else if (core.defect == detail::SurfaceDefect::vertex)
        r.witness = "link vertex " + std::to_string(core.defect_index) + " has a link that is not a circle";
    return r;
}

} // namespace graphconf
