#include "gridroute/tile_potential.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gridroute/envelope.hpp"
#include "gridroute/exact.hpp"

namespace gridroute {

namespace {

// All spreads below are at the destination tile's own rate, so they are only
// exact when every finite tile on a layer shares that rate.
void check_shape(const GeneralCosts& gc) {
  const TileGrid& g = gc.grid();
  for (int z = 1; z <= g.layers(); ++z) {
    Cost hz = kInfCost, vz = kInfCost, wz = kInfCost;
    for (int i = 0; i < g.cols(); ++i)
      for (int j = 0; j < g.rows(); ++j) {
        const Cost h = gc.h(i, j, z), v = gc.v(i, j, z);
        if (is_finite(h) != is_finite(v))
          throw std::invalid_argument("tile potential: tile with mixed finite/infinite plane costs");
        if (is_finite(h)) {
          if (!is_finite(hz)) {
            hz = h;
            vz = v;
          } else if (h != hz || v != vz) {
            throw std::invalid_argument("tile potential: finite plane costs differ within a layer");
          }
        }
        if (z < g.layers() && is_finite(gc.via(i, j, z))) {
          const Cost w = gc.via(i, j, z);
          if (!is_finite(wz))
            wz = w;
          else if (w != wz)
            throw std::invalid_argument("tile potential: finite via costs differ within a layer pair");
          if (!is_finite(h) || !is_finite(gc.h(i, j, z + 1)))
            throw std::invalid_argument("tile potential: finite via on a tile outside the area");
        }
      }
  }
}

class TileFamily final : public PotentialProvider {
 public:
  TileFamily(GeneralCosts gc, TargetSet targets)
      : gc_(std::move(gc)), targets_(std::move(targets)) {
    const TileGrid& g = gc_.grid();
    cols_ = g.cols();
    rows_ = g.rows();
    l_ = g.layers();
    sets_.resize(static_cast<std::size_t>(cols_) * rows_ * l_);
    seed();
    sweep();
  }

  Cost at(Point3 p) const override {
    if (p.z < 1 || p.z > l_) return kInfCost;
    const TileGrid& g = gc_.grid();
    const auto [i0, i1] = g.cols_at(p.x);
    const auto [j0, j1] = g.rows_at(p.y);
    Cost best = kInfCost;
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j)
        for (const Entry& e : sets_[idx(i, j, p.z)]) best = std::min(best, e.fn.at(p.x, p.y));
    return best;
  }

  Flavor flavor() const override { return Flavor::kGeneral; }

 private:
  struct Entry {
    AffineFn2 fn;
    std::uint32_t id = 0;
  };

  std::size_t idx(int i, int j, int z) const {
    return (static_cast<std::size_t>(i) * rows_ + j) * l_ + (z - 1);
  }

  // Offsets stay well below 2^62 so every affine evaluation over the bounded
  // universe fits in 64 bits.
  static Cost off(i128 v) {
    constexpr i128 cap = i128(1) << 62;
    if (v > cap || v < -cap)
      throw std::overflow_error("tile potential: function offset out of range");
    return static_cast<Cost>(v);
  }

  std::array<i128, 4> corner_values(int i, int j, const AffineFn2& f) const {
    const TileGrid& g = gc_.grid();
    const Coord xl = g.x_lo(i), xh = g.x_hi(i), yl = g.y_lo(j), yh = g.y_hi(j);
    auto ev = [&](Coord x, Coord y) { return i128(f.ax) * x + i128(f.ay) * y + f.c; };
    return {ev(xl, yl), ev(xl, yh), ev(xh, yl), ev(xh, yh)};
  }

  // Keeps the set free of pairwise-dominated functions: a new function whose
  // values are nowhere below an existing one is dropped, and it evicts every
  // existing function it weakly dominates.  Domination of one affine function
  // over another on a rectangle is decided by the four corners.  Surviving a
  // pairwise check is necessary but not sufficient for winning somewhere, so
  // the set can hold a few functions the pointwise minimum never needs;
  // that costs a little query time and no correctness.
  void try_insert(int i, int j, int z, const AffineFn2& f) {
    auto& set = sets_[idx(i, j, z)];
    const auto fc = corner_values(i, j, f);
    for (const Entry& e : set) {
      const auto ec = corner_values(i, j, e.fn);
      if (ec[0] <= fc[0] && ec[1] <= fc[1] && ec[2] <= fc[2] && ec[3] <= fc[3]) return;
    }
    std::erase_if(set, [&](const Entry& e) {
      const auto ec = corner_values(i, j, e.fn);
      return fc[0] <= ec[0] && fc[1] <= ec[1] && fc[2] <= ec[2] && fc[3] <= ec[3];
    });
    const std::uint32_t id = next_id_++;
    set.push_back({f, id});
    const Cost key = static_cast<Cost>(std::min({fc[0], fc[1], fc[2], fc[3]}));
    heap_.push({key, idx(i, j, z), id});
  }

  // Tiles fully inside a target rectangle hold the zero function.  The grid
  // is refined beforehand, so every target is a union of such tiles.
  void seed() {
    const TileGrid& g = gc_.grid();
    for (const Rect& r : targets_.rects)
      for (int i = 0; i < cols_; ++i) {
        if (g.x_lo(i) < r.x_lo || g.x_hi(i) > r.x_hi) continue;
        for (int j = 0; j < rows_; ++j) {
          if (g.y_lo(j) < r.y_lo || g.y_hi(j) > r.y_hi) continue;
          try_insert(i, j, r.z, {0, 0, 0});
        }
      }
  }

  void sweep() {
    const TileGrid& g = gc_.grid();
    std::int64_t pops = 0;
    while (!heap_.empty()) {
      const auto [key, t, id] = heap_.top();
      heap_.pop();
      const auto& set = sets_[t];
      const auto it = std::find_if(set.begin(), set.end(),
                                   [&](const Entry& e) { return e.id == id; });
      if (it == set.end()) continue;  // evicted since: stale heap entry
      if (++pops > kPopCap) throw std::runtime_error("tile potential: labeling did not converge");
      const AffineFn2 f = it->fn;  // by value: inserts may reallocate the set
      const int z = 1 + static_cast<int>(t % l_);
      const int j = static_cast<int>((t / l_) % rows_);
      const int i = static_cast<int>(t / (static_cast<std::size_t>(l_) * rows_));
      const Coord xl = g.x_lo(i), xh = g.x_hi(i), yl = g.y_lo(j), yh = g.y_hi(j);

      // Movement inside a zero-extent tile is free in that direction.
      auto rate_x = [&](int ci, int cj) -> Cost {
        return g.x_lo(ci) == g.x_hi(ci) ? 0 : gc_.h(ci, cj, z);
      };
      auto rate_y = [&](int ci, int cj) -> Cost {
        return g.y_lo(cj) == g.y_hi(cj) ? 0 : gc_.v(ci, cj, z);
      };

      // Across each boundary: restrict f to the shared edge and spread into
      // the neighbour at the neighbour's rate.  Skipped when the neighbour
      // is out of area; its interior is then unreachable in that direction
      // and its boundary lines belong to this tile as well.
      if (i + 1 < cols_) {
        const Cost r = rate_x(i + 1, j);
        if (is_finite(r))
          try_insert(i + 1, j, z, {r, f.ay, off(i128(f.ax) * xh + f.c - i128(r) * xh)});
      }
      if (i > 0) {
        const Cost r = rate_x(i - 1, j);
        if (is_finite(r))
          try_insert(i - 1, j, z, {-r, f.ay, off(i128(f.ax) * xl + f.c + i128(r) * xl)});
      }
      if (j + 1 < rows_) {
        const Cost r = rate_y(i, j + 1);
        if (is_finite(r))
          try_insert(i, j + 1, z, {f.ax, r, off(i128(f.ay) * yh + f.c - i128(r) * yh)});
      }
      if (j > 0) {
        const Cost r = rate_y(i, j - 1);
        if (is_finite(r))
          try_insert(i, j - 1, z, {f.ax, -r, off(i128(f.ay) * yl + f.c + i128(r) * yl)});
      }

      // Across each corner: a path may turn exactly on a corner whose two
      // bridging tiles are out of area, which the boundary spreads miss.
      const struct {
        int di, dj;
        Coord cx, cy;
        int sx, sy;
      } diags[4] = {{+1, +1, xh, yh, +1, +1},
                    {+1, -1, xh, yl, +1, -1},
                    {-1, +1, xl, yh, -1, +1},
                    {-1, -1, xl, yl, -1, -1}};
      for (const auto& d : diags) {
        const int ni = i + d.di, nj = j + d.dj;
        if (ni < 0 || ni >= cols_ || nj < 0 || nj >= rows_) continue;
        const Cost rx = rate_x(ni, nj), ry = rate_y(ni, nj);
        if (!is_finite(rx) || !is_finite(ry)) continue;
        const i128 fv = i128(f.ax) * d.cx + i128(f.ay) * d.cy + f.c;
        try_insert(ni, nj, z,
                   {d.sx * rx, d.sy * ry, off(fv - i128(d.sx * rx) * d.cx - i128(d.sy * ry) * d.cy)});
      }

      // Through vias: a constant shift, same footprint one layer up or down.
      if (z < l_ && is_finite(gc_.via(i, j, z)))
        try_insert(i, j, z + 1, {f.ax, f.ay, off(i128(f.c) + gc_.via(i, j, z))});
      if (z > 1 && is_finite(gc_.via(i, j, z - 1)))
        try_insert(i, j, z - 1, {f.ax, f.ay, off(i128(f.c) + gc_.via(i, j, z - 1))});

      // Within the tile itself: anchor f on an own boundary and spread back
      // inwards.  This is what prices a detour that runs to the boundary
      // before turning (a via or a crossing into the next tile); a turn
      // strictly inside the tile is never better than turning at the anchor
      // or not detouring at all, because cost is affine in the turn point.
      // On an unbounded side nothing can be anchored: any function would
      // otherwise go negative, so no valid one outruns the spread rate.
      const Cost hr = rate_x(i, j), vr = rate_y(i, j);
      if (is_finite(hr) && xl < xh) {
        if (xh < kUniverseHi)
          try_insert(i, j, z, {-hr, f.ay, off(i128(f.ax) * xh + f.c + i128(hr) * xh)});
        if (xl > kUniverseLo)
          try_insert(i, j, z, {hr, f.ay, off(i128(f.ax) * xl + f.c - i128(hr) * xl)});
      }
      if (is_finite(vr) && yl < yh) {
        if (yh < kUniverseHi)
          try_insert(i, j, z, {f.ax, -vr, off(i128(f.ay) * yh + f.c + i128(vr) * yh)});
        if (yl > kUniverseLo)
          try_insert(i, j, z, {f.ax, vr, off(i128(f.ay) * yl + f.c - i128(vr) * yl)});
      }
    }
  }

  static constexpr std::int64_t kPopCap = 10'000'000;

  GeneralCosts gc_;
  TargetSet targets_;
  int cols_ = 0, rows_ = 0, l_ = 0;
  std::vector<std::vector<Entry>> sets_;
  std::priority_queue<std::tuple<Cost, std::size_t, std::uint32_t>,
                      std::vector<std::tuple<Cost, std::size_t, std::uint32_t>>, std::greater<>>
      heap_;
  std::uint32_t next_id_ = 0;
};

}  // namespace

std::unique_ptr<PotentialProvider> make_tile_potential(const GeneralCosts& gc,
                                                       const TargetSet& targets) {
  if (!gc.valid()) throw std::invalid_argument("tile potential: invalid costs");
  if (targets.empty()) throw std::invalid_argument("tile potential: empty target set");
  for (const Rect& r : targets.rects)
    if (!r.valid() || r.z < 1 || r.z > gc.grid().layers())
      throw std::invalid_argument("tile potential: target rectangle out of range");
  GeneralCosts refined = refine_grid(gc, targets);
  check_shape(refined);
  return std::make_unique<TileFamily>(std::move(refined), targets);
}

}  // namespace gridroute
