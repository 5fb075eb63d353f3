#include "gridroute/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gridroute {

bool SimpleCosts::valid() const {
  const int l = layers();
  if (l == 0) return false;
  if (static_cast<int>(vert.size()) != l) return false;
  if (static_cast<int>(via.size()) != l - 1) return false;
  auto ok = [](Cost c) { return c > 0 && c <= kMaxFiniteCost; };
  return std::all_of(horiz.begin(), horiz.end(), ok) &&
         std::all_of(vert.begin(), vert.end(), ok) &&
         std::all_of(via.begin(), via.end(), ok);
}

TileGrid::TileGrid(std::vector<Coord> xs, std::vector<Coord> ys, int layers)
    : xs_(std::move(xs)), ys_(std::move(ys)), layers_(layers) {}

namespace {

bool cuts_valid(const std::vector<Coord>& cs) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i] < -kCoordLimit || cs[i] > kCoordLimit) return false;
    if (i > 0 && cs[i] < cs[i - 1]) return false;
    if (i > 1 && cs[i] == cs[i - 2]) return false;  // at most two equal
  }
  return true;
}

// Inclusive index range of spans [c^i, c^{i+1}] that contain the point v.
std::pair<int, int> spans_at(const std::vector<Coord>& cs, Coord v) {
  const int first =
      static_cast<int>(std::lower_bound(cs.begin(), cs.end(), v) - cs.begin());
  const int last =
      static_cast<int>(std::upper_bound(cs.begin(), cs.end(), v) - cs.begin());
  return {first, last};
}

// Inclusive index range of spans containing [lo, hi]; empty (first > last)
// only when lo > hi.
std::pair<int, int> spans_over(const std::vector<Coord>& cs, Coord lo, Coord hi) {
  const int first =
      static_cast<int>(std::lower_bound(cs.begin(), cs.end(), hi) - cs.begin());
  const int last =
      static_cast<int>(std::upper_bound(cs.begin(), cs.end(), lo) - cs.begin());
  return {first, last};
}

// True iff [lo, hi] is a union of consecutive spans of cs: both bounds are
// cuts, and a degenerate extent lies on a duplicated cut (zero-width span).
bool extent_fits(const std::vector<Coord>& cs, Coord lo, Coord hi) {
  auto count = [&](Coord v) {
    auto [a, b] = std::equal_range(cs.begin(), cs.end(), v);
    return static_cast<int>(b - a);
  };
  if (lo == hi) return count(lo) >= 2;
  return count(lo) >= 1 && count(hi) >= 1;
}

}  // namespace

std::pair<int, int> TileGrid::cols_at(Coord x) const { return spans_at(xs_, x); }
std::pair<int, int> TileGrid::rows_at(Coord y) const { return spans_at(ys_, y); }
std::pair<int, int> TileGrid::cols_spanning(Coord lo, Coord hi) const {
  return spans_over(xs_, lo, hi);
}
std::pair<int, int> TileGrid::rows_spanning(Coord lo, Coord hi) const {
  return spans_over(ys_, lo, hi);
}

bool TileGrid::valid() const {
  return layers_ >= 1 && cuts_valid(xs_) && cuts_valid(ys_);
}

GeneralCosts::GeneralCosts(TileGrid grid, Cost fill) : grid_(std::move(grid)) {
  const std::size_t n = static_cast<std::size_t>(grid_.cols()) * grid_.rows() * grid_.layers();
  horiz_.assign(n, fill);
  vert_.assign(n, fill);
  via_.assign(n, fill);  // entries for z = layers() are unused
}

GeneralCosts GeneralCosts::from_simple(const SimpleCosts& sc) {
  GeneralCosts gc(TileGrid({}, {}, sc.layers()), 0);
  for (int z = 1; z <= sc.layers(); ++z) {
    gc.h(0, 0, z) = sc.horiz[z - 1];
    gc.v(0, 0, z) = sc.vert[z - 1];
    gc.via(0, 0, z) = z < sc.layers() ? sc.via[z - 1] : kInfCost;
  }
  return gc;
}

GeneralCosts GeneralCosts::transposed() const {
  GeneralCosts t(TileGrid(grid_.ys(), grid_.xs(), grid_.layers()), 0);
  for (int i = 0; i < grid_.cols(); ++i)
    for (int j = 0; j < grid_.rows(); ++j)
      for (int z = 1; z <= grid_.layers(); ++z) {
        t.h(j, i, z) = v(i, j, z);
        t.v(j, i, z) = h(i, j, z);
        t.via(j, i, z) = via(i, j, z);
      }
  return t;
}

int GeneralCosts::distinct_plane_costs() const {
  std::set<Cost> vals;
  for (Cost c : horiz_)
    if (is_finite(c)) vals.insert(c);
  for (Cost c : vert_)
    if (is_finite(c)) vals.insert(c);
  return static_cast<int>(vals.size());
}

bool GeneralCosts::valid() const {
  if (!grid_.valid()) return false;
  auto ok = [](Cost c) { return c == kInfCost || (c > 0 && c <= kMaxFiniteCost); };
  return std::all_of(horiz_.begin(), horiz_.end(), ok) &&
         std::all_of(vert_.begin(), vert_.end(), ok) &&
         std::all_of(via_.begin(), via_.end(), ok);
}

Cost edge_cost(const GeneralCosts& gc, const Edge& e) {
  const TileGrid& g = gc.grid();
  Cost best = kInfCost;
  if (e.horizontal()) {
    auto [i0, i1] = g.cols_spanning(e.a.x, e.b.x);
    auto [j0, j1] = g.rows_at(e.a.y);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) best = cost_min(best, gc.h(i, j, e.a.z));
  } else if (e.vertical()) {
    auto [i0, i1] = g.cols_at(e.a.x);
    auto [j0, j1] = g.rows_spanning(e.a.y, e.b.y);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) best = cost_min(best, gc.v(i, j, e.a.z));
  } else {
    auto [i0, i1] = g.cols_at(e.a.x);
    auto [j0, j1] = g.rows_at(e.a.y);
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) best = cost_min(best, gc.via(i, j, e.a.z));
  }
  return best;
}

bool is_consistent(const TileGrid& grid, const TargetSet& targets) {
  for (const Rect& r : targets.rects) {
    if (!r.valid() || r.z < 1 || r.z > grid.layers()) return false;
    if (!extent_fits(grid.xs(), r.x_lo, r.x_hi)) return false;
    if (!extent_fits(grid.ys(), r.y_lo, r.y_hi)) return false;
  }
  return true;
}

bool boundary_coords_on_grid(const TileGrid& grid, const TargetSet& targets) {
  auto on = [](const std::vector<Coord>& cs, Coord v) {
    return std::binary_search(cs.begin(), cs.end(), v);
  };
  for (const Rect& r : targets.rects) {
    if (!r.valid() || r.z < 1 || r.z > grid.layers()) return false;
    if (!on(grid.xs(), r.x_lo) || !on(grid.xs(), r.x_hi)) return false;
    if (!on(grid.ys(), r.y_lo) || !on(grid.ys(), r.y_hi)) return false;
  }
  return true;
}

namespace {

// Coordinates to add so that [lo, hi] becomes a union of spans of cs.
void plan_cuts(const std::vector<Coord>& cs, Coord lo, Coord hi,
               std::vector<Coord>* add) {
  auto count = [&](Coord v) {
    auto [a, b] = std::equal_range(cs.begin(), cs.end(), v);
    int n = static_cast<int>(b - a);
    n += static_cast<int>(std::count(add->begin(), add->end(), v));
    return n;
  };
  if (lo == hi) {
    for (int n = count(lo); n < 2; ++n) add->push_back(lo);
  } else {
    if (count(lo) == 0) add->push_back(lo);
    if (count(hi) == 0) add->push_back(hi);
  }
}

}  // namespace

GeneralCosts refine_grid(const GeneralCosts& gc, const TargetSet& targets) {
  const TileGrid& g = gc.grid();
  std::vector<Coord> add_x, add_y;
  for (const Rect& r : targets.rects) {
    if (!r.valid()) throw std::invalid_argument("refine_grid: invalid rect");
    plan_cuts(g.xs(), r.x_lo, r.x_hi, &add_x);
    plan_cuts(g.ys(), r.y_lo, r.y_hi, &add_y);
  }
  if (add_x.empty() && add_y.empty()) return gc;

  std::vector<Coord> xs = g.xs(), ys = g.ys();
  xs.insert(xs.end(), add_x.begin(), add_x.end());
  ys.insert(ys.end(), add_y.begin(), add_y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  // Map each new column/row to the old one it was carved from.  Matching the
  // old cuts to the new ones in order keeps a pre-existing zero-extent span
  // glued to its own copy of the coordinate, so its costs survive; merely
  // picking any containing old span would hand such a span its neighbour's
  // costs instead.
  auto parents_of = [](const std::vector<Coord>& now, const std::vector<Coord>& old) {
    std::vector<int> par(now.size() + 1);
    std::size_t io = 0;
    for (std::size_t k = 0; k <= now.size(); ++k) {
      par[k] = static_cast<int>(io);
      if (k < now.size() && io < old.size() && old[io] == now[k]) ++io;
    }
    return par;
  };
  const std::vector<int> px = parents_of(xs, g.xs());
  const std::vector<int> py = parents_of(ys, g.ys());

  TileGrid refined(xs, ys, g.layers());
  GeneralCosts out(refined, 0);
  for (int i = 0; i < refined.cols(); ++i) {
    const int pi = px[i];
    for (int j = 0; j < refined.rows(); ++j) {
      const int pj = py[j];
      for (int z = 1; z <= refined.layers(); ++z) {
        out.h(i, j, z) = gc.h(pi, pj, z);
        out.v(i, j, z) = gc.v(pi, pj, z);
        out.via(i, j, z) = gc.via(pi, pj, z);
      }
    }
  }
  return out;
}

}  // namespace gridroute
