#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "graphconf/detail/union_find.hpp"
#include "graphconf/error.hpp"

namespace graphconf {

// Sorted, duplicate-free vertex list.
using Simplex = std::vector<std::uint32_t>;

/// Finite abstract simplicial complex on vertices 0..vertex_count()-1.
///
/// Every vertex is a 0-simplex. Faces are kept per dimension in sorted order,
/// which makes membership a binary search and output deterministic.
/// The empty complex (no vertices) is a valid value.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `simplices` on `vertex_count` vertices.
    static SimplicialComplex closure(std::size_t vertex_count, const std::vector<Simplex>& simplices) {
        std::vector<std::set<Simplex>> by_dim(1);
        for (std::uint32_t v = 0; v < vertex_count; ++v) by_dim[0].insert(Simplex{v});
        // Largest first, so sub-simplices already inserted by a superset are skipped.
        std::vector<const Simplex*> order;
        for (const auto& s : simplices) order.push_back(&s);
        std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() > b->size(); });
        Simplex sub;
        for (const auto* ptr : order) {
            auto s = *ptr;
            if (s.empty()) continue;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw InvalidArgument("simplex with a repeated vertex");
            if (!s.empty() && s.back() >= vertex_count) throw InvalidArgument("simplex vertex out of range");
            if (s.size() > 24) throw InvalidArgument("simplex too large to close");
            if (s.size() > by_dim.size()) by_dim.resize(s.size());
            if (by_dim[s.size() - 1].count(s)) continue;
            const std::uint32_t subsets = 1u << s.size();
            for (std::uint32_t mask = 1; mask < subsets; ++mask) {
                sub.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(s[i]);
                by_dim[sub.size() - 1].insert(sub);
            }
        }
        SimplicialComplex out;
        out.vertex_count_ = vertex_count;
        if (vertex_count == 0) return out;
        for (auto& layer : by_dim) out.faces_.emplace_back(layer.begin(), layer.end());
        while (!out.faces_.empty() && out.faces_.back().empty()) out.faces_.pop_back();
        return out;
    }

    std::size_t vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return vertex_count_ == 0; }

    std::span<const Simplex> faces(int d) const {
        if (d < 0 || d > dimension()) return {};
        return faces_[static_cast<std::size_t>(d)];
    }
    std::size_t face_count(int d) const { return faces(d).size(); }

    bool contains(const Simplex& s) const {
        if (s.empty()) return true;
        auto layer = faces(static_cast<int>(s.size()) - 1);
        return std::binary_search(layer.begin(), layer.end(), s);
    }

    long euler_characteristic() const {
        long chi = 0;
        for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(face_count(d));
        return chi;
    }

    // Sorted neighbor lists of the 1-skeleton.
    std::vector<std::vector<std::uint32_t>> adjacency() const {
        std::vector<std::vector<std::uint32_t>> adj(vertex_count_);
        for (const auto& e : faces(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    std::uint32_t component_count() const {
        detail::UnionFind uf(vertex_count_);
        for (const auto& e : faces(1)) uf.unite(e[0], e[1]);
        std::uint32_t count = 0;
        uf.labels(&count);
        return count;
    }

    // Every codimension-one face of every face is present.
    bool downward_closed() const {
        Simplex sub;
        for (int d = 1; d <= dimension(); ++d)
            for (const auto& s : faces(d))
                for (std::size_t skip = 0; skip < s.size(); ++skip) {
                    sub.clear();
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != skip) sub.push_back(s[i]);
                    if (!contains(sub)) return false;
                }
        return true;
    }

    // Image under a vertex relabeling (which must be injective).
    SimplicialComplex relabeled(std::span<const std::uint32_t> new_label, std::size_t new_vertex_count) const {
        std::vector<Simplex> all;
        for (int d = 0; d <= dimension(); ++d)
            for (const auto& s : faces(d)) {
                Simplex t;
                for (auto v : s) t.push_back(new_label[v]);
                all.push_back(std::move(t));
            }
        return closure(new_vertex_count, all);
    }

    bool operator==(const SimplicialComplex& o) const {
        return vertex_count_ == o.vertex_count_ && faces_ == o.faces_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Simplex>> faces_;
};

} // namespace graphconf
