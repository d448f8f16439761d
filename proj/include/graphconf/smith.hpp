#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphconf/error.hpp"

namespace graphconf {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix with small entries.
class SparseIntMatrix {
public:
    struct Entry {
        std::uint32_t row;
        long long value;
        bool operator==(const Entry&) const = default;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    // Accumulates into (row, col). Call finalize() before reading.
    void add(std::size_t row, std::size_t col, long long value) {
        if (row >= rows_ || col >= columns_.size()) throw InvalidArgument("matrix index out of range");
        columns_[col].push_back({static_cast<std::uint32_t>(row), value});
        finalized_ = false;
    }

    void finalize() {
        for (auto& col : columns_) {
            std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
            std::vector<Entry> merged;
            for (const auto& e : col) {
                if (!merged.empty() && merged.back().row == e.row)
                    merged.back().value += e.value;
                else
                    merged.push_back(e);
            }
            std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
            col = std::move(merged);
        }
        finalized_ = true;
    }

    std::span<const Entry> column(std::size_t c) const { return columns_.at(c); }

    long long at(std::size_t r, std::size_t c) const {
        const auto& col = columns_.at(c);
        auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.row < row; });
        return it != col.end() && it->row == r ? it->value : 0;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const {
        return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
    }

    // this * rhs
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const {
        if (cols() != rhs.rows()) throw InvalidArgument("matrix shapes do not compose");
        SparseIntMatrix out(rows(), rhs.cols());
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            for (const auto& [k, b] : rhs.column(j))
                for (const auto& [i, a] : column(k)) out.add(i, j, a * b);
        out.finalize();
        return out;
    }

    SparseIntMatrix transposed() const {
        SparseIntMatrix out(cols(), rows());
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : column(c)) out.add(c, r, v);
        out.finalize();
        return out;
    }

    std::vector<std::vector<long long>> dense() const {
        std::vector<std::vector<long long>> m(rows_, std::vector<long long>(cols(), 0));
        for (std::size_t c = 0; c < cols(); ++c)
            for (const auto& [r, v] : column(c)) m[r][c] = v;
        return m;
    }

    bool operator==(const SparseIntMatrix& o) const { return rows_ == o.rows_ && columns_ == o.columns_; }

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
    bool finalized_ = true;
};

struct SmithForm {
    std::size_t rank = 0;
    // Nonzero diagonal entries (positive), each dividing the next.
    std::vector<BigInt> invariant_factors;

    std::vector<BigInt> torsion() const {
        std::vector<BigInt> t;
        for (const auto& f : invariant_factors)
            if (f > 1) t.push_back(f);
        return t;
    }
};

namespace detail {

using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

inline const BigInt* find_in_row(const SparseRow& row, std::uint32_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

// Dense Smith normal form on a small residual matrix. Pivots on a
// smallest-magnitude entry each round so entries stay bounded.
inline std::vector<BigInt> dense_smith_diagonal(std::vector<std::vector<BigInt>> a) {
    std::vector<BigInt> diag;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        auto pick_min = [&](bool whole) -> bool {
            std::size_t bi = m, bj = n;
            BigInt best = -1;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (!whole && i != t && j != t) continue;
                    if (a[i][j] == 0) continue;
                    BigInt mag = abs(a[i][j]);
                    if (best < 0 || mag < best) {
                        best = mag;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == m) return false;
            std::swap(a[t], a[bi]);
            swap_cols(t, bj);
            return true;
        };
        if (!pick_min(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) {
                pick_min(false);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the rest.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

} // namespace detail

/// Exact Smith normal form over the integers.
///
/// Unit pivots are eliminated first on the sparse structure, choosing the
/// pivot of least Markowitz cost; whatever has no unit entry left is handed to
/// a dense arbitrary-precision reduction.
inline SmithForm smith_normal_form(const SparseIntMatrix& m) {
    const auto nrows = m.rows();
    const auto ncols = m.cols();
    std::vector<detail::SparseRow> rows(nrows);
    std::vector<std::set<std::uint32_t>> col_rows(ncols);
    for (std::uint32_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : m.column(c)) {
            rows[r].emplace_back(c, BigInt(v));
            col_rows[c].insert(r);
        }
    for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::size_t unit_pivots = 0;
    detail::SparseRow merged;
    for (;;) {
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        std::uint32_t pr = 0, pc = 0;
        for (std::uint32_t c = 0; c < ncols && best_cost > 0; ++c) {
            const auto clen = col_rows[c].size();
            if (clen == 0) continue;
            for (auto r : col_rows[c]) {
                const BigInt* v = detail::find_in_row(rows[r], c);
                if (!v || (*v != 1 && *v != -1)) continue;
                const auto cost = (rows[r].size() - 1) * (clen - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    pr = r;
                    pc = c;
                    if (cost == 0) break;
                }
            }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max()) break;

        const BigInt unit = *detail::find_in_row(rows[pr], pc);
        const std::vector<std::uint32_t> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (auto r : targets) {
            if (r == pr) continue;
            const BigInt factor = *detail::find_in_row(rows[r], pc) * unit;
            merged.clear();
            auto& a = rows[r];
            const auto& b = rows[pr];
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                    merged.push_back(std::move(a[i++]));
                } else if (i == a.size() || b[j].first < a[i].first) {
                    merged.emplace_back(b[j].first, -factor * b[j].second);
                    col_rows[b[j].first].insert(r);
                    ++j;
                } else {
                    BigInt v = a[i].second - factor * b[j].second;
                    if (v != 0)
                        merged.emplace_back(a[i].first, std::move(v));
                    else
                        col_rows[a[i].first].erase(r);
                    ++i;
                    ++j;
                }
            }
            a.swap(merged);
        }
        for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
        rows[pr].clear();
        ++unit_pivots;
    }

    // Residual block without unit entries.
    std::vector<std::uint32_t> live_rows, live_cols;
    for (std::uint32_t r = 0; r < nrows; ++r)
        if (!rows[r].empty()) live_rows.push_back(r);
    for (std::uint32_t c = 0; c < ncols; ++c)
        if (!col_rows[c].empty()) live_cols.push_back(c);

    SmithForm out;
    out.invariant_factors.assign(unit_pivots, BigInt(1));
    if (!live_rows.empty()) {
        std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows[live_rows[i]]) {
                auto pos = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
                dense[i][static_cast<std::size_t>(pos)] = v;
            }
        for (auto& f : detail::dense_smith_diagonal(std::move(dense))) out.invariant_factors.push_back(std::move(f));
    }
    out.rank = out.invariant_factors.size();
    return out;
}

} // namespace graphconf
