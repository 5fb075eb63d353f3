#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gridroute/model.hpp"
#include "gridroute/subgraph.hpp"

// Internal helpers shared by the search loops; not installed.

namespace gridroute::detail {

// Per-window lookup tables mapping window coordinates to tile indices, so the
// inner Dijkstra loop avoids binary searches.
struct CostView {
  const GeneralCosts* gc;
  Window win;
  // span_col[k]: column containing [x_lo+k, x_lo+k+1]; pt_col_first/last[k]:
  // columns containing the point x_lo+k.  Same for rows.
  std::vector<int> span_col, pt_col_first, pt_col_last;
  std::vector<int> span_row, pt_row_first, pt_row_last;

  CostView(const GeneralCosts& g, const Window& w) : gc(&g), win(w) {
    const TileGrid& grid = g.grid();
    span_col.resize(static_cast<std::size_t>(std::max<std::int64_t>(w.width() - 1, 0)));
    for (std::int64_t k = 0; k + 1 < w.width(); ++k)
      span_col[static_cast<std::size_t>(k)] =
          grid.cols_spanning(w.x_lo + k, w.x_lo + k + 1).first;
    pt_col_first.resize(static_cast<std::size_t>(w.width()));
    pt_col_last.resize(static_cast<std::size_t>(w.width()));
    for (std::int64_t k = 0; k < w.width(); ++k) {
      auto [a, b] = grid.cols_at(w.x_lo + k);
      pt_col_first[static_cast<std::size_t>(k)] = a;
      pt_col_last[static_cast<std::size_t>(k)] = b;
    }
    span_row.resize(static_cast<std::size_t>(std::max<std::int64_t>(w.height() - 1, 0)));
    for (std::int64_t k = 0; k + 1 < w.height(); ++k)
      span_row[static_cast<std::size_t>(k)] =
          grid.rows_spanning(w.y_lo + k, w.y_lo + k + 1).first;
    pt_row_first.resize(static_cast<std::size_t>(w.height()));
    pt_row_last.resize(static_cast<std::size_t>(w.height()));
    for (std::int64_t k = 0; k < w.height(); ++k) {
      auto [a, b] = grid.rows_at(w.y_lo + k);
      pt_row_first[static_cast<std::size_t>(k)] = a;
      pt_row_last[static_cast<std::size_t>(k)] = b;
    }
  }

  // Cost of the edge from p one step in direction d (0:+x 1:-x 2:+y 3:-y
  // 4:+z 5:-z); kInfCost when the edge leaves the window.
  Cost step_cost(Point3 p, int d) const {
    const std::size_t kx = static_cast<std::size_t>(p.x - win.x_lo);
    const std::size_t ky = static_cast<std::size_t>(p.y - win.y_lo);
    Cost best = kInfCost;
    switch (d) {
      case 0:
      case 1: {
        const std::size_t s = d == 0 ? kx : kx - 1;
        const int i = span_col[s];
        for (int j = pt_row_first[ky]; j <= pt_row_last[ky]; ++j)
          best = cost_min(best, gc->h(i, j, p.z));
        return best;
      }
      case 2:
      case 3: {
        const std::size_t s = d == 2 ? ky : ky - 1;
        const int j = span_row[s];
        for (int i = pt_col_first[kx]; i <= pt_col_last[kx]; ++i)
          best = cost_min(best, gc->v(i, j, p.z));
        return best;
      }
      default: {
        const int z = d == 4 ? p.z : p.z - 1;
        for (int i = pt_col_first[kx]; i <= pt_col_last[kx]; ++i)
          for (int j = pt_row_first[ky]; j <= pt_row_last[ky]; ++j)
            best = cost_min(best, gc->via(i, j, z));
        return best;
      }
    }
  }
};

inline Point3 neighbor(Point3 p, int d) {
  switch (d) {
    case 0: return {p.x + 1, p.y, p.z};
    case 1: return {p.x - 1, p.y, p.z};
    case 2: return {p.x, p.y + 1, p.z};
    case 3: return {p.x, p.y - 1, p.z};
    case 4: return {p.x, p.y, p.z + 1};
    default: return {p.x, p.y, p.z - 1};
  }
}

}  // namespace gridroute::detail
