#include "gridroute/general_potential.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <utility>

namespace gridroute {

namespace {

// Labels whose best value on the segment exceeds this are dropped: they can
// never matter at instance scales, and skipping them keeps every offset the
// function sets see comfortably inside the exact-arithmetic range.
constexpr Cost kLabelValueCap = Cost(1) << 59;

struct HeapEnt {
  Rat key;
  int z = 0, m = 0, i = 0;  // for corner labels i is the vertical cut index
  Cost slope = 0;
  std::uint32_t id = 0;
  std::uint32_t ver = 0;
  bool corner = false;
};

struct EntAfter {
  bool operator()(const HeapEnt& a, const HeapEnt& b) const {
    const int c = rat_cmp(a.key, b.key);
    if (c != 0) return c > 0;
    if (a.corner != b.corner) return a.corner < b.corner;
    if (a.z != b.z) return a.z > b.z;
    if (a.m != b.m) return a.m > b.m;
    if (a.i != b.i) return a.i > b.i;
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.id > b.id;
  }
};

template <class T>
void ensure_slot(std::vector<T>& v, std::uint32_t id) {
  if (v.size() <= id) v.resize(id + 1, T{});
}

AffineFn1 fn_by_id(const FunctionSet& fs, std::uint32_t id) {
  for (const auto& e : fs.entries())
    if (e.id == id) return e.fn;
  assert(!"id not kept");
  return {};
}

}  // namespace

SegmentLabels SegmentLabels::compute(const GeneralCosts& gc, const TargetSet& targets) {
  const TileGrid& g = gc.grid();
  const int p = g.x_cuts(), q = g.y_cuts(), l = g.layers();

  SegmentLabels out;
  out.cols_ = g.cols();
  out.cuts_ = q;
  out.l_ = l;
  if (q == 0) return out;

  out.sets_.reserve(static_cast<std::size_t>(q) * out.cols_ * l);
  for (int m = 1; m <= q; ++m)
    for (int i = 0; i <= p; ++i)
      for (int z = 1; z <= l; ++z) out.sets_.emplace_back(g.x_lo(i), g.x_hi(i));

  std::vector<std::vector<std::uint32_t>> vers(out.sets_.size());
  std::vector<std::vector<char>> done(out.sets_.size());
  out.corner_.assign(static_cast<std::size_t>(p) * q * l, kInfCost);
  std::vector<char> cdone(out.corner_.size(), 0);
  std::priority_queue<HeapEnt, std::vector<HeapEnt>, EntAfter> heap;

  auto relax_corner = [&](int a, int m, int z, Cost val) {
    if (!is_finite(val)) return;
    const std::size_t ci = out.cidx(a, m, z);
    if (val >= out.corner_[ci]) return;
    out.corner_[ci] = val;
    heap.push({Rat::of(val), z, m, a, 0, 0, 0, true});
  };

  auto try_insert = [&](int i, int m, int z, Cost slope, i128 off) {
    const std::size_t si = out.idx(i, m, z);
    FunctionSet& fs = out.sets_[si];
    const i128 vlo = i128(slope) * g.x_lo(i) + off;
    const i128 vhi = i128(slope) * g.x_hi(i) + off;
    assert(vlo >= 0 && vhi >= 0);
    if (std::min(vlo, vhi) > kLabelValueCap) return;
    ++out.stats_.inserts;
    const FnInsertOutcome oc = fs.insert({slope, static_cast<Cost>(off)});
    out.stats_.max_set = std::max(out.stats_.max_set, fs.size());
    if (oc.inserted) {
      ensure_slot(vers[si], oc.id);
      ensure_slot(done[si], oc.id);
      heap.push({*fs.key_of(oc.id), z, m, i, slope, oc.id, vers[si][oc.id]});
    }
    if (oc.key_increased) {
      const std::uint32_t nb = *oc.key_increased;
      ensure_slot(vers[si], nb);
      ++vers[si][nb];
      heap.push({*fs.key_of(nb), z, m, i, fn_by_id(fs, nb).slope, nb, vers[si][nb]});
    }
  };

  // Seed from the targets: a segment inside a rectangle knows distance zero
  // everywhere; a segment touching one at an endpoint knows the cost of
  // walking in from that endpoint.
  for (const Rect& r : targets.rects) {
    for (int m = 1; m <= q; ++m) {
      const Coord yc = g.ys()[m - 1];
      if (yc < r.y_lo || yc > r.y_hi) continue;
      for (int i = 0; i <= p; ++i) {
        const Coord xlo = g.x_lo(i), xhi = g.x_hi(i);
        if (r.x_lo <= xlo && xhi <= r.x_hi) {
          try_insert(i, m, r.z, 0, 0);
          continue;
        }
        const Cost run = cost_min(gc.h(i, m - 1, r.z), gc.h(i, m, r.z));
        if (!is_finite(run)) continue;
        if (r.contains({xlo, yc, r.z})) try_insert(i, m, r.z, run, -i128(run) * xlo);
        if (r.contains({xhi, yc, r.z})) try_insert(i, m, r.z, -run, i128(run) * xhi);
      }
    }
    for (int a = 1; a <= p; ++a) {
      const Coord xc = g.xs()[a - 1];
      if (xc < r.x_lo || xc > r.x_hi) continue;
      for (int m = 1; m <= q; ++m)
        if (r.contains({xc, g.ys()[m - 1], r.z})) relax_corner(a, m, r.z, 0);
    }
  }

  Rat last = Rat::of(-1);
  while (!heap.empty()) {
    const HeapEnt e = heap.top();
    heap.pop();
    if (e.corner) {
      const int a = e.i, m = e.m, z = e.z;
      const std::size_t ci = out.cidx(a, m, z);
      if (cdone[ci] || rat_cmp(Rat::of(out.corner_[ci]), e.key) != 0) continue;
      cdone[ci] = 1;
      ++out.stats_.corner_pops;
      if (rat_cmp(e.key, last) < 0) out.stats_.keys_monotone = false;
      last = e.key;

      const Cost v = out.corner_[ci];
      const Coord xc = g.xs()[a - 1];
      const auto [c0, c1] = g.cols_at(xc);
      const auto [r0, r1] = g.rows_at(g.ys()[m - 1]);
      // Vias at the point: the cheapest over every tile containing it.
      for (const int dz : {+1, -1}) {
        if (z + dz < 1 || z + dz > l) continue;
        Cost w = kInfCost;
        for (int ti = c0; ti <= c1; ++ti)
          for (int tj = r0; tj <= r1; ++tj)
            w = cost_min(w, gc.via(ti, tj, dz > 0 ? z : z - 1));
        relax_corner(a, m, z + dz, cost_add(v, w));
      }
      // Straight along the cut across an adjacent row, hugging whichever
      // column meeting the cut is cheapest.  A zero-height row transfers
      // the label for free.
      for (const int dm : {+1, -1}) {
        if (m + dm < 1 || m + dm > q) continue;
        const int row = dm > 0 ? m : m - 1;
        Cost rate = kInfCost;
        for (int ti = c0; ti <= c1; ++ti) rate = cost_min(rate, gc.v(ti, row, z));
        const Cost w = cost_mul(rate, g.y_hi(row) - g.y_lo(row));
        relax_corner(a, m + dm, z, cost_add(v, w));
      }
      // Seed the incident segments with functions anchored at the point.
      for (const int sc : {a - 1, a}) {
        if (g.x_lo(sc) == g.x_hi(sc)) {
          try_insert(sc, m, z, 0, v);
          continue;
        }
        const Cost run = cost_min(gc.h(sc, m - 1, z), gc.h(sc, m, z));
        if (!is_finite(run)) continue;
        if (sc == a - 1)
          try_insert(sc, m, z, -run, i128(v) + i128(run) * xc);
        else
          try_insert(sc, m, z, run, i128(v) - i128(run) * xc);
      }
      continue;
    }
    const std::size_t si = out.idx(e.i, e.m, e.z);
    if (e.ver != vers[si][e.id]) continue;
    FunctionSet& fs = out.sets_[si];
    const auto k = fs.key_of(e.id);
    if (!k || rat_cmp(*k, e.key) != 0) continue;
    if (done[si][e.id]) continue;
    done[si][e.id] = 1;
    ++out.stats_.pops;
    if (rat_cmp(e.key, last) < 0) out.stats_.keys_monotone = false;
    last = e.key;

    const AffineFn1 f = fn_by_id(fs, e.id);
    const int i = e.i, m = e.m, z = e.z;
    const Coord xlo = g.x_lo(i), xhi = g.x_hi(i);

    // Deposit the endpoint values on the cut intersections, where they can
    // leave the segment even when a neighbouring column admits no run.
    if (i >= 1) relax_corner(i, m, z, f.at(xlo));
    if (i + 1 <= p) relax_corner(i + 1, m, z, f.at(xhi));

    // Through a via at the cut line: the cheaper of the two adjacent rows.
    if (z + 1 <= l) {
      const Cost w = cost_min(gc.via(i, m - 1, z), gc.via(i, m, z));
      if (is_finite(w)) try_insert(i, m, z + 1, f.slope, i128(f.offset) + w);
    }
    if (z - 1 >= 1) {
      const Cost w = cost_min(gc.via(i, m - 1, z - 1), gc.via(i, m, z - 1));
      if (is_finite(w)) try_insert(i, m, z - 1, f.slope, i128(f.offset) + w);
    }
    // Straight across the adjacent row to the next cut.  A duplicated cut
    // gives a zero-height row, which transfers the function unchanged even
    // when the row itself is blocked.
    if (m + 1 <= q) {
      const Cost w = cost_mul(gc.v(i, m, z), g.y_hi(m) - g.y_lo(m));
      if (is_finite(w)) try_insert(i, m + 1, z, f.slope, i128(f.offset) + w);
    }
    if (m - 1 >= 1) {
      const Cost w = cost_mul(gc.v(i, m - 1, z), g.y_hi(m - 1) - g.y_lo(m - 1));
      if (is_finite(w)) try_insert(i, m - 1, z, f.slope, i128(f.offset) + w);
    }
    // Across the shared endpoint into the neighbouring column, spreading with
    // that column's cheapest run cost next to the cut.
    if (i - 1 >= 0) {
      const Cost run = cost_min(gc.h(i - 1, m - 1, z), gc.h(i - 1, m, z));
      if (is_finite(run)) {
        const i128 val = i128(f.slope) * xlo + f.offset;
        try_insert(i - 1, m, z, -run, val + i128(run) * xlo);
      }
    }
    if (i + 1 <= p) {
      const Cost run = cost_min(gc.h(i + 1, m - 1, z), gc.h(i + 1, m, z));
      if (is_finite(run)) {
        const i128 val = i128(f.slope) * xhi + f.offset;
        try_insert(i + 1, m, z, run, val - i128(run) * xhi);
      }
    }
  }
  return out;
}

LayerArborescence LayerArborescence::build(int z_lo, int z_hi, int eps_num, int eps_den) {
  if (z_lo > z_hi || eps_num <= 0 || eps_den <= 0)
    throw std::invalid_argument("bad layer interval or exponent");
  const int n = z_hi - z_lo + 1;

  // smallest d with d^eps_den >= n^eps_num, i.e. ceil(n^(eps_num/eps_den))
  auto sat_pow = [](std::uint64_t b, int e, bool& sat) {
    u128 r = 1;
    sat = false;
    for (int t = 0; t < e; ++t) {
      if (b != 0 && r > ~u128(0) / b) {
        sat = true;
        return r;
      }
      r *= b;
    }
    return r;
  };
  bool sat_n = false;
  const u128 rhs = sat_pow(static_cast<std::uint64_t>(n), eps_num, sat_n);
  int degree = n;
  for (int d = 1; d <= n; ++d) {
    bool sat_d = false;
    const u128 lhs = sat_pow(static_cast<std::uint64_t>(d), eps_den, sat_d);
    if (sat_d || (!sat_n && lhs >= rhs)) {
      degree = d;
      break;
    }
  }

  LayerArborescence arb;
  arb.degree = degree;

  auto split = [&](auto&& self, int lo, int hi) -> int {
    const int idx = static_cast<int>(arb.nodes.size());
    arb.nodes.push_back({lo, hi, {}});
    if (lo == hi) return idx;
    const int len = hi - lo + 1;
    const int base = len / degree, extra = len % degree;
    int cur = lo;
    for (int part = 0; part < degree && cur <= hi; ++part) {
      const int sz = base + (part < extra ? 1 : 0);
      if (sz == 0) continue;
      const int kid = self(self, cur, cur + sz - 1);
      arb.nodes[idx].kids.push_back(kid);
      cur += sz;
    }
    return idx;
  };
  split(split, z_lo, z_hi);

  auto depth_of = [&](auto&& self, int ni) -> int {
    int d = 0;
    for (int kid : arb.nodes[ni].kids) d = std::max(d, 1 + self(self, kid));
    return d;
  };
  arb.depth = depth_of(depth_of, 0);
  return arb;
}

GeneralOracle::GeneralOracle(GeneralCosts gc, TargetSet targets, int eps_num, int eps_den)
    : gc_(std::move(gc)), targets_(std::move(targets)) {
  if (!gc_.valid()) throw std::invalid_argument("invalid tile costs");
  if (targets_.empty()) throw std::invalid_argument("empty target set");
  if (eps_num <= 0 || eps_den <= 0 || eps_num > 16 || eps_den > 16)
    throw std::invalid_argument("exponent out of range");
  const int l = gc_.grid().layers();
  for (const Rect& r : targets_.rects)
    if (!r.valid() || r.z < 1 || r.z > l) throw std::invalid_argument("invalid target rectangle");
  if (!boundary_coords_on_grid(gc_.grid(), targets_))
    throw std::invalid_argument("target boundaries not on grid coordinates");
  eps_num_ = eps_num;
  eps_den_ = eps_den;

  hor_ = SegmentLabels::compute(gc_, targets_);
  vert_ = SegmentLabels::compute(gc_.transposed(), transposed(targets_));

  const TileGrid& g = gc_.grid();
  tiles_.resize(static_cast<std::size_t>(g.cols()) * g.rows());
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j) build_tile(i, j);
}

void GeneralOracle::build_tile(int i, int j) {
  const TileGrid& g = gc_.grid();
  const int p = g.x_cuts(), q = g.y_cuts(), l = g.layers();
  Tile& t = tiles_[static_cast<std::size_t>(i) * g.rows() + j];

  // Via stack straight to a target rectangle covering this tile.
  t.viaonly.assign(l, kInfCost);
  for (const Rect& r : targets_.rects)
    if (r.x_lo <= g.x_lo(i) && g.x_hi(i) <= r.x_hi && r.y_lo <= g.y_lo(j) &&
        g.y_hi(j) <= r.y_hi)
      t.viaonly[r.z - 1] = 0;
  for (int z = 2; z <= l; ++z)
    t.viaonly[z - 1] = cost_min(t.viaonly[z - 1], cost_add(t.viaonly[z - 2], gc_.via(i, j, z - 1)));
  for (int z = l - 1; z >= 1; --z)
    t.viaonly[z - 1] = cost_min(t.viaonly[z - 1], cost_add(t.viaonly[z], gc_.via(i, j, z)));

  // One query structure per maximal run of layers connected by finite vias.
  t.ival_of.assign(l, -1);
  const Box box{g.x_lo(i), g.x_hi(i), g.y_lo(j), g.y_hi(j)};
  int za = 1;
  for (int z = 1; z <= l; ++z) {
    if (z < l && is_finite(gc_.via(i, j, z))) continue;
    Interval iv;
    iv.za = za;
    iv.zb = z;
    iv.via_cum.resize(z - za + 1, 0);
    for (int zz = za + 1; zz <= z; ++zz)
      iv.via_cum[zz - za] = iv.via_cum[zz - za - 1] + gc_.via(i, j, zz - 1);
    iv.arb = LayerArborescence::build(za, z, eps_num_, eps_den_);

    // Exit candidates per layer: leave the tile straight through one of its
    // sides and continue with the distance envelope on that boundary segment.
    std::vector<std::vector<AffineFn2>> cand(z - za + 1);
    for (int zz = za; zz <= z; ++zz) {
      auto& list = cand[zz - za];
      if (j + 1 <= q) {
        const Cost ap = gc_.v(i, j, zz);
        if (is_finite(ap))
          for (const auto& e : hor_.at(i, j + 1, zz).entries())
            list.push_back({e.fn.slope, -ap,
                            static_cast<Cost>(i128(e.fn.offset) + i128(ap) * g.y_hi(j))});
      }
      if (j >= 1) {
        const Cost ap = gc_.v(i, j, zz);
        if (is_finite(ap))
          for (const auto& e : hor_.at(i, j, zz).entries())
            list.push_back({e.fn.slope, ap,
                            static_cast<Cost>(i128(e.fn.offset) - i128(ap) * g.y_lo(j))});
      }
      if (i + 1 <= p) {
        const Cost ap = gc_.h(i, j, zz);
        if (is_finite(ap))
          for (const auto& e : vert_.at(j, i + 1, zz).entries())
            list.push_back({-ap, e.fn.slope,
                            static_cast<Cost>(i128(e.fn.offset) + i128(ap) * g.x_hi(i))});
      }
      if (i >= 1) {
        const Cost ap = gc_.h(i, j, zz);
        if (is_finite(ap))
          for (const auto& e : vert_.at(j, i, zz).entries())
            list.push_back({ap, e.fn.slope,
                            static_cast<Cost>(i128(e.fn.offset) - i128(ap) * g.x_lo(i))});
      }
    }

    iv.eq.resize(z - za + 1);
    for (int zz = za; zz <= z; ++zz)
      if (!cand[zz - za].empty()) iv.eq[zz - za] = EnvelopeIndex::build(box, cand[zz - za]);

    // Per interval-tree node: exits at layers of the later (up) or earlier
    // (down) siblings, with the via prefix to the exit layer baked into the
    // constant so one envelope serves every query layer of the node.
    iv.up.resize(iv.arb.nodes.size());
    iv.dn.resize(iv.arb.nodes.size());
    for (std::size_t ni = 0; ni < iv.arb.nodes.size(); ++ni) {
      const auto& kids = iv.arb.nodes[ni].kids;
      for (std::size_t a = 0; a < kids.size(); ++a) {
        std::vector<AffineFn2> above, below;
        for (std::size_t b = a + 1; b < kids.size(); ++b)
          for (int zz = iv.arb.nodes[kids[b]].lo; zz <= iv.arb.nodes[kids[b]].hi; ++zz)
            for (const AffineFn2& f : cand[zz - za])
              above.push_back({f.ax, f.ay, f.c + iv.via_cum[zz - za]});
        for (std::size_t b = 0; b < a; ++b)
          for (int zz = iv.arb.nodes[kids[b]].lo; zz <= iv.arb.nodes[kids[b]].hi; ++zz)
            for (const AffineFn2& f : cand[zz - za])
              below.push_back({f.ax, f.ay, f.c - iv.via_cum[zz - za]});
        if (!above.empty()) iv.up[kids[a]] = EnvelopeIndex::build(box, above);
        if (!below.empty()) iv.dn[kids[a]] = EnvelopeIndex::build(box, below);
      }
    }

    for (int zz = za; zz <= z; ++zz) t.ival_of[zz - 1] = static_cast<int>(t.ivals.size());
    t.ivals.push_back(std::move(iv));
    za = z + 1;
  }
}

Cost GeneralOracle::query(Point3 v) const {
  const TileGrid& g = gc_.grid();
  if (v.z < 1 || v.z > g.layers() || std::abs(v.x) > kCoordLimit || std::abs(v.y) > kCoordLimit)
    throw std::invalid_argument("query point outside the grid");
  if (targets_.contains(v)) return 0;
  const auto [c0, c1] = g.cols_at(v.x);
  const auto [r0, r1] = g.rows_at(v.y);
  Cost best = kInfCost;
  for (int i = c0; i <= c1; ++i)
    for (int j = r0; j <= r1; ++j) best = cost_min(best, interior_query(i, j, v));
  if (c0 != c1 || r0 != r1) best = cost_min(best, boundary_query(v));
  return best;
}

Cost GeneralOracle::interior_query(int i, int j, Point3 v) const {
  const Tile& t = tiles_[static_cast<std::size_t>(i) * gc_.grid().rows() + j];
  Cost ans = t.viaonly[v.z - 1];
  const Interval& iv = t.ivals[t.ival_of[v.z - 1]];
  const Cost vz = iv.via_cum[v.z - iv.za];
  int ni = 0;
  while (true) {
    const LayerNode& n = iv.arb.nodes[ni];
    if (n.kids.empty()) break;
    int kid = -1;
    for (int k : n.kids)
      if (iv.arb.nodes[k].lo <= v.z && v.z <= iv.arb.nodes[k].hi) {
        kid = k;
        break;
      }
    assert(kid >= 0);
    if (iv.up[kid].built()) ans = cost_min(ans, iv.up[kid].value_at(v.x, v.y) - vz);
    if (iv.dn[kid].built()) ans = cost_min(ans, iv.dn[kid].value_at(v.x, v.y) + vz);
    ni = kid;
  }
  if (iv.eq[v.z - iv.za].built()) ans = cost_min(ans, iv.eq[v.z - iv.za].value_at(v.x, v.y));
  return ans;
}

Cost GeneralOracle::segments_at(Point3 v, int z) const {
  const TileGrid& g = gc_.grid();
  Cost best = kInfCost;
  const auto [c0, c1] = g.cols_at(v.x);
  const auto& ys = g.ys();
  for (int m = 1; m <= g.y_cuts(); ++m) {
    if (ys[m - 1] != v.y) continue;
    for (int i = c0; i <= c1; ++i) {
      const FunctionSet& fs = hor_.at(i, m, z);
      if (!fs.empty()) best = cost_min(best, fs.min_at(v.x));
    }
  }
  const auto [r0, r1] = g.rows_at(v.y);
  const auto& xs = g.xs();
  for (int m = 1; m <= g.x_cuts(); ++m) {
    if (xs[m - 1] != v.x) continue;
    for (int j = r0; j <= r1; ++j) {
      const FunctionSet& fs = vert_.at(j, m, z);
      if (!fs.empty()) best = cost_min(best, fs.min_at(v.y));
    }
  }
  return best;
}

Cost GeneralOracle::boundary_query(Point3 v) const {
  // On a cut line the interior structures of the incident tiles walk at
  // those tiles' own rates, which may all be infinite even though the line
  // itself is usable.  Read the incident segment envelopes directly, and
  // walk the via stack anchored at the point to consult them on every layer
  // it reaches.
  const TileGrid& g = gc_.grid();
  const auto [c0, c1] = g.cols_at(v.x);
  const auto [r0, r1] = g.rows_at(v.y);
  auto via_at = [&](int z) {
    Cost w = kInfCost;
    for (int i = c0; i <= c1; ++i)
      for (int j = r0; j <= r1; ++j) w = cost_min(w, gc_.via(i, j, z));
    return w;
  };
  const auto [xa, xb] = std::equal_range(g.xs().begin(), g.xs().end(), v.x);
  const auto [ya, yb] = std::equal_range(g.ys().begin(), g.ys().end(), v.y);
  auto level = [&](int z) {
    Cost w = segments_at(v, z);
    for (auto ix = xa; ix != xb; ++ix)
      for (auto iy = ya; iy != yb; ++iy) {
        const int a = static_cast<int>(ix - g.xs().begin()) + 1;
        const int m = static_cast<int>(iy - g.ys().begin()) + 1;
        w = cost_min(w, hor_.corner(a, m, z));
      }
    return w;
  };
  Cost best = kInfCost;
  Cost acc = 0;
  for (int z = v.z; z <= g.layers(); ++z) {
    if (z > v.z) {
      acc = cost_add(acc, via_at(z - 1));
      if (!is_finite(acc)) break;
    }
    if (targets_.contains({v.x, v.y, z})) best = cost_min(best, acc);
    best = cost_min(best, cost_add(acc, level(z)));
  }
  acc = 0;
  for (int z = v.z - 1; z >= 1; --z) {
    acc = cost_add(acc, via_at(z));
    if (!is_finite(acc)) break;
    if (targets_.contains({v.x, v.y, z})) best = cost_min(best, acc);
    best = cost_min(best, cost_add(acc, level(z)));
  }
  return best;
}

}  // namespace gridroute
