#pragma once

#include <optional>
#include <vector>

#include "graphconf/cube_complex.hpp"
#include "graphconf/detail/parallel.hpp"

namespace graphconf::detail {

// Runs `check(d, c)` on every cell in canonical order (dimension, then
// index). Per-cell work may run concurrently; the returned hit is always the
// first in canonical order.
template <typename Result, typename Check>
std::vector<std::optional<Result>> per_cell(const CubeComplex& x, unsigned threads, Check&& check) {
    std::vector<CubeRef> cells;
    for (int d = 0; d <= x.dimension(); ++d)
        for (CellIndex c = 0; c < x.cell_count(d); ++c) cells.push_back({d, c});
    std::vector<std::optional<Result>> results(cells.size());
    for_each_chunk(cells.size(), threads <= 1 ? 1 : 8 * threads, threads,
                   [&](std::size_t b, std::size_t e, std::size_t) {
                       for (std::size_t i = b; i < e; ++i) results[i] = check(cells[i].dim, cells[i].index);
                   });
    return results;
}

} // namespace graphconf::detail
