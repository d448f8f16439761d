#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphconf/graphconf.hpp"

namespace graphconf::cli {

// Exit statuses.
inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

struct RunConfig {
    std::string graph;
    std::string morphism;
    int n = 2;
    bool ordered = true;
    std::string out;
    double cap = 5e6;
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
    int random = 0;         // curvature: number of random graphs instead of --graph
    bool per_cell = false;
    bool simultaneous = false;
    bool decomposition = false; // export-dot: the decomposition graph instead of the 1-skeleton
    std::vector<VertexId> start;
    std::vector<VertexId> goal;
};

namespace detail {

inline void validate(const RunConfig& rc) {
    if (rc.n < 1) throw InvalidArgument("--n must be at least 1");
    if (!(rc.cap > 0)) throw InvalidArgument("--cap must be positive");
}

inline std::shared_ptr<const ColoredGraph> load_graph(const RunConfig& rc) {
    if (rc.graph.empty()) throw InvalidArgument("--graph is required");
    return std::make_shared<const ColoredGraph>(read_graph_file(rc.graph));
}

inline void check_cap(const ColoredGraph& g, int n, bool ordered, double cap) {
    const double bound = estimated_cell_bound(g, n, ordered);
    if (bound > cap) {
        std::ostringstream msg;
        msg << "estimated " << std::setprecision(3) << bound << " cells exceeds the cap of " << cap
            << "; lower --n or raise --cap";
        throw InvalidArgument(msg.str());
    }
}

inline ConfigSpace load_space(const RunConfig& rc) {
    validate(rc);
    auto g = load_graph(rc);
    check_cap(*g, rc.n, rc.ordered, rc.cap);
    return build_space(g, rc.n, rc.ordered, {rc.threads});
}

inline std::string join_counts(const std::vector<std::size_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string torsion_string(const std::vector<BigInt>& t) {
    std::string s;
    for (const auto& x : t) s += " + Z/" + x.str();
    return s;
}

inline std::string surface_phrase(const SurfaceClassification& s) {
    if (!s.closed_surface) return "not a closed surface (" + s.witness + ")";
    if (s.orientable) return "closed orientable surface, genus " + std::to_string(s.genus);
    return "closed non-orientable surface, " + std::to_string(s.crosscaps) + " crosscaps";
}

inline void write_report(const RunConfig& rc, const Json& j) {
    if (!rc.out.empty()) write_text_file(rc.out, j.dump(2) + "\n");
}

} // namespace detail

/// Builds the complex, prints cell counts and writes the interchange file.
inline int cmd_build(const RunConfig& rc, std::ostream& out, std::ostream& log = std::cerr) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = detail::load_space(rc);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    out << "cells: " << detail::join_counts(space.cell_counts(), " / ") << "\n";
    log << "build time: " << std::fixed << std::setprecision(3) << dt.count() << " s\n";
    detail::write_report(rc, to_json(space));
    return exit_pass;
}

/// Euler characteristic, homology, per-component π1 abelianization and
/// surface recognition.
inline int cmd_analyze(const RunConfig& rc, std::ostream& out) {
    const auto space = detail::load_space(rc);
    const auto& x = space.complex();
    const auto chi = euler_characteristic(x);
    const auto comps = connected_components(x);
    const auto h = homology(x);
    bool consistent = h.euler_characteristic() == chi && (h.betti.empty() ? comps.count == 0 : h.betti[0] == comps.count);

    Json report{{"n", rc.n}, {"ordered", rc.ordered}, {"cells", space.cell_counts()}, {"euler", chi},
                {"betti", h.betti}, {"components", Json::array()}};
    out << "cells: " << detail::join_counts(space.cell_counts(), " / ") << "\n";
    out << "betti: " << detail::join_counts(h.betti, ", ") << "\n";
    for (std::size_t d = 0; d < h.torsion.size(); ++d)
        if (!h.torsion[d].empty()) out << "torsion H" << d << ":" << detail::torsion_string(h.torsion[d]) << "\n";

    std::optional<std::string> headline;
    for (std::uint32_t k = 0; k < comps.count; ++k) {
        const auto sub = component_subcomplex(x, comps, k);
        const auto hk = homology(sub.complex);
        const auto ab = abelianization(simplify(pi1_presentation(x, comps, k)));
        const AbelianGroup h1{hk.betti.size() > 1 ? hk.betti[1] : 0,
                              hk.torsion.size() > 1 ? hk.torsion[1] : std::vector<BigInt>{}};
        const bool matches = ab == h1;
        consistent = consistent && matches;
        Json cj{{"component", k}, {"euler", euler_characteristic(sub.complex)}, {"pi1_abelian_rank", ab.rank},
                {"matches_h1", matches}};
        out << "component " << k << ": chi=" << euler_characteristic(sub.complex) << "; pi1^ab rank " << ab.rank
            << detail::torsion_string(ab.torsion) << (matches ? "" : " (differs from H1)");
        if (x.dimension() <= 2) {
            const auto s = surface_classify(x, comps, k);
            cj["surface"] = detail::surface_phrase(s);
            out << "; " << detail::surface_phrase(s);
            if (comps.count == 1 && s.closed_surface) headline = detail::surface_phrase(s);
        }
        out << "\n";
        report["components"].push_back(cj);
    }
    out << "chi=" << chi << "; ";
    if (headline)
        out << *headline << "\n";
    else
        out << comps.count << (comps.count == 1 ? " component" : " components") << "\n";
    report["consistent"] = consistent;
    detail::write_report(rc, report);
    return consistent ? exit_pass : exit_check_failed;
}

namespace detail {

inline void print_counterexample(const LinkConditionFailure& f, std::ostream& out) {
    out << "empty triangle in the link of " << f.cell_label << ":";
    for (const auto& m : f.triangle_labels) out << " [" << m << "]";
    out << "\n";
}

} // namespace detail

/// Link condition (per-cell triangles) and the flag condition on vertex links.
/// With --random N, runs on N seeded random colored graphs instead.
inline int cmd_curvature(const RunConfig& rc, std::ostream& out) {
    detail::validate(rc);
    if (rc.random > 0) {
        std::mt19937_64 rng(rc.seed);
        int failures = 0;
        for (int i = 0; i < rc.random; ++i) {
            const auto g = random_colored_graph(rng);
            const auto space = build_space(std::make_shared<const ColoredGraph>(g), rc.n, rc.ordered, {rc.threads});
            const auto r = check_link_condition(space, rc.threads);
            if (!r.passed) {
                ++failures;
                out << "graph " << i << ": ";
                detail::print_counterexample(*r.counterexample, out);
            }
        }
        out << "random graphs: " << rc.random << ", seed " << rc.seed << ", counterexamples: " << failures << "\n";
        return failures ? exit_check_failed : exit_pass;
    }
    const auto space = detail::load_space(rc);
    const auto r = check_link_condition(space, rc.threads);
    const auto flag = check_flag_condition(space, true, rc.threads);
    Json report{{"cells_checked", r.cells_checked}, {"link_condition", r.passed}, {"flag_vertex_links", flag.passed}};
    if (r.passed)
        out << "link condition: pass (" << r.cells_checked << " cells)\n";
    else {
        out << "link condition: fail\n";
        detail::print_counterexample(*r.counterexample, out);
        report["counterexample"] = {{"cell", r.counterexample->cell_label},
                                    {"moves", r.counterexample->triangle_labels}};
    }
    out << "flag condition on vertex links: " << (flag.passed ? "pass" : "fail") << "\n";
    if (rc.per_cell)
        for (const auto& c : flag.cells)
            out << "  " << space.describe(c.cell.dim, c.cell.index) << ": " << (c.flag ? "flag" : "not flag") << "\n";
    detail::write_report(rc, report);
    return r.passed && flag.passed ? exit_pass : exit_check_failed;
}

/// Link types per dimension and, for injectively colored ordered spaces, the
/// manifold criterion away from the (n-3)-skeleton.
inline int cmd_manifold(const RunConfig& rc, std::ostream& out) {
    const auto space = detail::load_space(rc);
    const auto cls = classify_links(space, rc.threads);
    Json report{{"counts", Json::array()}};
    for (int d = std::max(0, space.dimension() - 3); d <= space.dimension(); ++d) {
        out << "dimension " << d << " links:";
        for (auto t : all_link_types)
            if (auto k = cls.count(d, t)) {
                out << " " << to_string(t) << " " << k;
                report["counts"].push_back({{"dimension", d}, {"type", to_string(t)}, {"cells", k}});
            }
        out << "\n";
    }
    if (rc.per_cell)
        for (const auto& r : cls.records)
            out << "  " << space.describe(r.cell.dim, r.cell.index) << ": " << to_string(r.type) << " (" << r.cofaces
                << " cofaces, chi=" << r.euler << ")\n";

    if (!space.graph().injective_coloring() || !space.ordered()) {
        out << "manifold criterion: not applicable (needs an injective coloring and ordered tokens)\n";
        detail::write_report(rc, report);
        return exit_pass;
    }
    const auto m = manifold_away_from_skeleton(space, rc.threads);
    report["manifold_away_from_skeleton"] = m.manifold;
    Json defects = Json::array();
    for (const auto& d : m.defects) defects.push_back({{"cell", space.describe(d.cell.dim, d.cell.index)}, {"reason", d.reason}});
    report["defects"] = defects;
    const int n = rc.n;
    const std::string where = n == 3 ? "away from vertices" : n <= 2 ? "" : "away from the " + std::to_string(n - 3) + "-skeleton";
    if (m.manifold) {
        out << n << "-manifold" << (where.empty() ? "" : " " + where);
        if (n >= 3) {
            const auto tori = cls.count(n - 3, LinkType::torus), spheres = cls.count(n - 3, LinkType::sphere);
            if (tori) out << "; " << tori << " torus links";
            if (spheres) out << "; " << spheres << " sphere links";
        }
        out << "\n";
    } else {
        out << "not a " << n << "-manifold" << (where.empty() ? "" : " " + where) << "; " << m.defects.size()
            << " defect cells\n";
        const std::size_t shown = rc.per_cell ? m.defects.size() : std::min<std::size_t>(m.defects.size(), 5);
        for (std::size_t i = 0; i < shown; ++i)
            out << "  defect " << space.describe(m.defects[i].cell.dim, m.defects[i].cell.index) << ": "
                << m.defects[i].reason << "\n";
    }
    detail::write_report(rc, report);
    return m.manifold ? exit_pass : exit_check_failed;
}

namespace detail {

template <typename Items>
std::string group_tally(const Items& items) {
    std::vector<std::pair<std::string, std::size_t>> tally;
    for (const auto& it : items) {
        const auto label = group_label(it.data);
        auto pos = std::find_if(tally.begin(), tally.end(), [&](const auto& p) { return p.first == label; });
        if (pos == tally.end())
            tally.push_back({label, 1});
        else
            ++pos->second;
    }
    std::string s;
    for (std::size_t i = 0; i < tally.size(); ++i)
        s += (i ? ", " : "") + tally[i].first + " x" + std::to_string(tally[i].second);
    return s.empty() ? "none" : s;
}

} // namespace detail

/// Decomposition graph over the base graph with fiber groups.
inline int cmd_split(const RunConfig& rc, std::ostream& out) {
    detail::validate(rc);
    if (rc.n < 2) throw InvalidArgument("split needs --n >= 2");
    if (!rc.ordered) throw InvalidArgument("split works on ordered configuration spaces");
    auto g = detail::load_graph(rc);
    detail::check_cap(*g, rc.n, true, rc.cap);
    const auto dg = decomposition_graph(g, rc.n, {rc.threads});
    out << "G^(" << rc.n << ")" << (dg.over_base_graph ? " = G" : "") << ": " << dg.nodes.size() << " vertices, "
        << dg.edges.size() << " edges; vertex groups " << detail::group_tally(dg.nodes) << "; edge groups "
        << detail::group_tally(dg.edges) << "\n";
    out << "euler: " << dg.parent_euler << " = " << dg.fiber_euler_sum << (dg.euler_identity_holds() ? "" : " (mismatch)")
        << "\n";
    out << "components: " << dg.component_count << " (configuration space " << dg.parent_component_count << ")\n";
    if (rc.per_cell) {
        for (std::size_t i = 0; i < dg.nodes.size(); ++i)
            out << "  node " << i << " over v" << dg.nodes[i].base << ": " << group_label(dg.nodes[i].data)
                << ", chi=" << dg.nodes[i].data.euler << "\n";
        for (const auto& e : dg.edges)
            out << "  edge over e" << e.base << ": " << e.tail << " -- " << e.head << ", " << group_label(e.data) << "\n";
    }
    detail::write_report(rc, to_json(dg));
    return dg.euler_identity_holds() && dg.components_agree ? exit_pass : exit_check_failed;
}

/// Shortest token motion between two configurations.
inline int cmd_plan(const RunConfig& rc, std::ostream& out) {
    auto space = detail::load_space(rc);
    if (rc.start.empty() || rc.goal.empty()) throw InvalidArgument("--start and --goal are required");
    const auto plan = shortest_path(space, rc.start, rc.goal, rc.simultaneous);
    if (!plan) {
        out << "unreachable: start and goal lie in different components\n";
        detail::write_report(rc, Json{{"reachable", false}});
        return exit_check_failed;
    }
    out << "distance: " << plan->length() << (rc.simultaneous ? " steps\n" : " moves\n");
    Json steps = Json::array();
    for (const auto& step : plan->steps) {
        Json js = Json::array();
        for (std::size_t i = 0; i < step.size(); ++i) {
            const auto& m = step[i];
            out << (i ? " " : "") << "(" << m.token << ", " << m.from << ", " << m.to << ")";
            js.push_back(Json::array({m.token, m.from, m.to}));
        }
        out << "\n";
        steps.push_back(js);
    }
    detail::write_report(rc, Json{{"reachable", true}, {"distance", plan->length()}, {"steps", steps}});
    return exit_pass;
}

/// Morphism class of f and whether f^n inherits it.
inline int cmd_cover(const RunConfig& rc, std::ostream& out) {
    detail::validate(rc);
    if (rc.morphism.empty()) throw InvalidArgument("--morphism is required");
    const auto f = read_morphism_file(rc.morphism);
    detail::check_cap(f.domain(), rc.n, rc.ordered, rc.cap);
    detail::check_cap(f.codomain(), rc.n, rc.ordered, rc.cap);
    const auto map = induced_map(f, rc.n, rc.ordered, {rc.threads});
    const auto rep = verify_induced_properties(f, map);
    const auto& cls = rep.graph_class;
    out << "graph map:" << (cls.injective ? " injective" : "") << (cls.immersion ? " immersion" : "")
        << (cls.covering ? " covering" : "") << (cls.surjective ? " surjective" : "");
    if (cls.degree) out << " (degree " << *cls.degree << ")";
    out << "\n";
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        out << "  " << c.name << ": " << (!c.premise ? "n/a" : c.holds ? "inherited" : "NOT inherited");
        if (c.premise && !c.holds) out << " (" << c.witness << ")";
        out << "\n";
        checks.push_back({{"name", c.name}, {"premise", c.premise}, {"holds", c.holds}});
    }
    out << "fibers over vertices: " << rep.min_fiber << ".." << rep.max_fiber;
    if (rep.expected_fiber) out << " (expected " << *rep.expected_fiber << ")";
    out << "\n";
    const auto& x = map.source->complex();
    const auto comps = connected_components(x);
    out << "total space: chi=" << euler_characteristic(x) << ", " << comps.count
        << (comps.count == 1 ? " component" : " components");
    if (comps.count == 1 && x.dimension() == 2) out << "; " << detail::surface_phrase(surface_classify(x, comps, 0));
    out << "\n";
    detail::write_report(rc, Json{{"checks", checks}, {"passed", rep.passed()}});
    return rep.passed() ? exit_pass : exit_check_failed;
}

/// DOT text of the 1-skeleton, or of the decomposition graph.
inline int cmd_export_dot(const RunConfig& rc, std::ostream& out) {
    std::string dot;
    if (rc.decomposition) {
        detail::validate(rc);
        auto g = detail::load_graph(rc);
        detail::check_cap(*g, rc.n, true, rc.cap);
        dot = decomposition_dot(decomposition_graph(g, rc.n, {rc.threads}));
    } else {
        dot = skeleton_dot(detail::load_space(rc));
    }
    if (rc.out.empty())
        out << dot;
    else
        write_text_file(rc.out, dot);
    return exit_pass;
}

} // namespace graphconf::cli
