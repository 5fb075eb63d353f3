#include "gridroute/simple_potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridroute {

ViaPrefix::ViaPrefix(const SimpleCosts& sc) {
  cum_.resize(sc.layers());
  cum_[0] = 0;
  for (int z = 1; z < sc.layers(); ++z) cum_[z] = cum_[z - 1] + sc.via[z - 1];
}

Cost simple_distance_quadratic(const SimpleCosts& sc, const ViaPrefix& vp, Point3 a, Point3 b) {
  const Cost dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
  const int l = sc.layers();
  Cost best = kInfCost;
  for (int zh = 1; zh <= l; ++zh) {
    for (int zv = 1; zv <= l; ++zv) {
      const Cost wire = dx * sc.horiz[zh - 1] + dy * sc.vert[zv - 1];
      // x movement first, then y; and the reverse
      best = cost_min(best, wire + vp.between(a.z, zh) + vp.between(zh, zv) + vp.between(zv, b.z));
      best = cost_min(best, wire + vp.between(a.z, zv) + vp.between(zv, zh) + vp.between(zh, b.z));
    }
  }
  return best;
}

namespace {

// min over layers z of (climb from z_from to some wire layer, run the x span
// there, climb to z) + (run the y span on z, climb to z_to)
Cost one_direction(const SimpleCosts& sc, const ViaPrefix& vp, int z_from, int z_to, Cost dx,
                   Cost dy) {
  const int l = sc.layers();
  std::vector<Cost> d(l + 1);
  // d[z] after the downward sweep: x done on some layer >= z, now at z
  d[l] = vp.between(z_from, l) + dx * sc.horiz[l - 1];
  for (int z = l - 1; z >= 1; --z)
    d[z] = cost_min(vp.between(z_from, z) + dx * sc.horiz[z - 1], d[z + 1] + sc.via[z - 1]);
  // upward sweep folds in wire layers below z
  for (int z = 2; z <= l; ++z) d[z] = cost_min(d[z], d[z - 1] + sc.via[z - 2]);
  Cost best = kInfCost;
  for (int z = 1; z <= l; ++z)
    best = cost_min(best, d[z] + dy * sc.vert[z - 1] + vp.between(z, z_to));
  return best;
}

}  // namespace

Cost simple_distance_linear(const SimpleCosts& sc, const ViaPrefix& vp, Point3 a, Point3 b) {
  const Cost dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
  // x before y seen from a, and x before y seen from b (== y before x from a)
  return cost_min(one_direction(sc, vp, a.z, b.z, dx, dy),
                  one_direction(sc, vp, b.z, a.z, dx, dy));
}

Cost simple_rect_distance(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v, const Rect& r) {
  return simple_distance_linear(sc, vp, v, r.clamp_xy(v));
}

Cost simple_target_distance(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v,
                            const TargetSet& targets) {
  Cost best = kInfCost;
  for (const Rect& r : targets.rects) best = cost_min(best, simple_rect_distance(sc, vp, v, r));
  return best;
}

Cost l1_potential(const SimpleCosts& sc, const ViaPrefix& vp, Point3 v, const TargetSet& targets) {
  const Cost ch = *std::min_element(sc.horiz.begin(), sc.horiz.end());
  const Cost cv = *std::min_element(sc.vert.begin(), sc.vert.end());
  Cost best = kInfCost;
  for (const Rect& r : targets.rects) {
    const Cost d = gap(v.x, r.x_lo, r.x_hi) * ch + gap(v.y, r.y_lo, r.y_hi) * cv +
                   vp.between(v.z, r.z);
    best = cost_min(best, d);
  }
  return best;
}

// ---- SimpleOracle ----------------------------------------------------------

SimpleOracle::SimpleOracle(const SimpleCosts& sc, const TargetSet& targets) {
  if (!sc.valid()) throw std::invalid_argument("invalid uniform costs");
  if (targets.empty()) throw std::invalid_argument("empty target set");
  l_ = sc.layers();
  const ViaPrefix vp(sc);

  std::vector<Coord> xs, ys;
  for (const Rect& r : targets.rects) {
    xs.push_back(r.x_lo);
    xs.push_back(r.x_hi);
    ys.push_back(r.y_lo);
    ys.push_back(r.y_hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  xe_.push_back(kUniverseLo);
  xe_.insert(xe_.end(), xs.begin(), xs.end());
  xe_.push_back(kUniverseHi);
  ye_.push_back(kUniverseLo);
  ye_.insert(ye_.end(), ys.begin(), ys.end());
  ye_.push_back(kUniverseHi);

  const int nc = cols(), nr = rows(), l = l_;
  const auto at = [&](std::vector<Cost>& v, int i, int j, int z1) -> Cost& {
    return v[(static_cast<std::size_t>(i) * nr + j) * l + z1 - 1];
  };
  const auto at2 = [&](std::vector<Cost>& v, int i, int j, int zh, int zv) -> Cost& {
    return v[((static_cast<std::size_t>(i) * nr + j) * l + zh - 1) * l + zv - 1];
  };

  // Family constants.  inside[i][j][z]: target overlaps the tile, value is
  // the via stack.  Axis families store the target-side constant of the
  // affine candidate; quadrant families store it per (wire-layer pair) and
  // per via order (wire axis nearer the query first / nearer the target
  // first).
  std::vector<Cost> inside(static_cast<std::size_t>(nc) * nr * l, kInfCost);
  std::vector<Cost> cn(inside.size(), kInfCost), cs(inside.size(), kInfCost),
      ce(inside.size(), kInfCost), cw(inside.size(), kInfCost);
  const std::size_t qsz = static_cast<std::size_t>(nc) * nr * l * l;
  std::vector<Cost> ne1(qsz, kInfCost), ne2(qsz, kInfCost), nw1(qsz, kInfCost), nw2(qsz, kInfCost),
      se1(qsz, kInfCost), se2(qsz, kInfCost), sw1(qsz, kInfCost), sw2(qsz, kInfCost);

  const auto col_cover = [&](const Rect& r, int i) {
    return r.x_lo <= xe_[i] && xe_[i + 1] <= r.x_hi;
  };
  const auto row_cover = [&](const Rect& r, int j) {
    return r.y_lo <= ye_[j] && ye_[j + 1] <= r.y_hi;
  };
  const auto cut_index = [](const std::vector<Coord>& edges, Coord c) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), c) - edges.begin());
  };

  for (const Rect& r : targets.rects) {
    // column/row index ranges covered by the rect (may be empty when the
    // extent is degenerate), plus the tile just outside each side
    const int ci_lo = cut_index(xe_, r.x_lo), ci_hi = cut_index(xe_, r.x_hi);
    const int rj_lo = cut_index(ye_, r.y_lo), rj_hi = cut_index(ye_, r.y_hi);
    for (int i = ci_lo; i < ci_hi; ++i) {
      if (!col_cover(r, i)) continue;
      for (int j = rj_lo; j < rj_hi; ++j)
        if (row_cover(r, j))
          for (int z = 1; z <= l; ++z)
            at(inside, i, j, z) = cost_min(at(inside, i, j, z), vp.between(z, r.z));
      for (int z = 1; z <= l; ++z) {
        // target north of row rj_lo-1 and everything below; south likewise
        if (rj_lo >= 1)
          at(cn, i, rj_lo - 1, z) = cost_min(at(cn, i, rj_lo - 1, z),
                                             r.y_lo * sc.vert[z - 1] + vp.between(z, r.z));
        if (rj_hi <= nr - 1)
          at(cs, i, rj_hi, z) = cost_min(at(cs, i, rj_hi, z),
                                         -r.y_hi * sc.vert[z - 1] + vp.between(z, r.z));
      }
    }
    for (int j = rj_lo; j < rj_hi; ++j) {
      if (!row_cover(r, j)) continue;
      for (int z = 1; z <= l; ++z) {
        if (ci_lo >= 1)
          at(ce, ci_lo - 1, j, z) = cost_min(at(ce, ci_lo - 1, j, z),
                                             r.x_lo * sc.horiz[z - 1] + vp.between(z, r.z));
        if (ci_hi <= nc - 1)
          at(cw, ci_hi, j, z) = cost_min(at(cw, ci_hi, j, z),
                                         -r.x_hi * sc.horiz[z - 1] + vp.between(z, r.z));
      }
    }
    // quadrant seeds at the four corners just outside the rect
    for (int zh = 1; zh <= l; ++zh) {
      for (int zv = 1; zv <= l; ++zv) {
        const Cost hv = vp.between(zh, zv), vt = vp.between(zv, r.z), ht = vp.between(zh, r.z);
        const Cost gx_e = r.x_lo * sc.horiz[zh - 1], gx_w = -r.x_hi * sc.horiz[zh - 1];
        const Cost gy_n = r.y_lo * sc.vert[zv - 1], gy_s = -r.y_hi * sc.vert[zv - 1];
        if (ci_lo >= 1 && rj_lo >= 1) {  // target to the north-east
          auto& a = at2(ne1, ci_lo - 1, rj_lo - 1, zh, zv);
          a = cost_min(a, gx_e + gy_n + hv + vt);  // x wire first
          auto& b = at2(ne2, ci_lo - 1, rj_lo - 1, zh, zv);
          b = cost_min(b, gx_e + gy_n + hv + ht);  // y wire first
        }
        if (ci_hi <= nc - 1 && rj_lo >= 1) {  // north-west
          auto& a = at2(nw1, ci_hi, rj_lo - 1, zh, zv);
          a = cost_min(a, gx_w + gy_n + hv + vt);
          auto& b = at2(nw2, ci_hi, rj_lo - 1, zh, zv);
          b = cost_min(b, gx_w + gy_n + hv + ht);
        }
        if (ci_lo >= 1 && rj_hi <= nr - 1) {  // south-east
          auto& a = at2(se1, ci_lo - 1, rj_hi, zh, zv);
          a = cost_min(a, gx_e + gy_s + hv + vt);
          auto& b = at2(se2, ci_lo - 1, rj_hi, zh, zv);
          b = cost_min(b, gx_e + gy_s + hv + ht);
        }
        if (ci_hi <= nc - 1 && rj_hi <= nr - 1) {  // south-west
          auto& a = at2(sw1, ci_hi, rj_hi, zh, zv);
          a = cost_min(a, gx_w + gy_s + hv + vt);
          auto& b = at2(sw2, ci_hi, rj_hi, zh, zv);
          b = cost_min(b, gx_w + gy_s + hv + ht);
        }
      }
    }
  }

  // propagate axis constants away from the targets
  for (int i = 0; i < nc; ++i)
    for (int z = 1; z <= l; ++z) {
      for (int j = nr - 2; j >= 0; --j)
        at(cn, i, j, z) = cost_min(at(cn, i, j, z), at(cn, i, j + 1, z));
      for (int j = 1; j < nr; ++j)
        at(cs, i, j, z) = cost_min(at(cs, i, j, z), at(cs, i, j - 1, z));
    }
  for (int j = 0; j < nr; ++j)
    for (int z = 1; z <= l; ++z) {
      for (int i = nc - 2; i >= 0; --i)
        at(ce, i, j, z) = cost_min(at(ce, i, j, z), at(ce, i + 1, j, z));
      for (int i = 1; i < nc; ++i)
        at(cw, i, j, z) = cost_min(at(cw, i, j, z), at(cw, i - 1, j, z));
    }
  // propagate quadrant constants: running 2-D minima toward the quadrant
  const auto sweep = [&](std::vector<Cost>& q, int di, int dj) {
    for (int zh = 1; zh <= l; ++zh)
      for (int zv = 1; zv <= l; ++zv) {
        for (int j = 0; j < nr; ++j) {
          for (int i = di > 0 ? 1 : nc - 2; i >= 0 && i < nc; i += di)
            at2(q, i, j, zh, zv) = cost_min(at2(q, i, j, zh, zv), at2(q, i - di, j, zh, zv));
        }
        for (int i = 0; i < nc; ++i) {
          for (int j = dj > 0 ? 1 : nr - 2; j >= 0 && j < nr; j += dj)
            at2(q, i, j, zh, zv) = cost_min(at2(q, i, j, zh, zv), at2(q, i, j - dj, zh, zv));
        }
      }
  };
  sweep(ne1, -1, -1);  // target NE: constants flow west and south
  sweep(ne2, -1, -1);
  sweep(nw1, +1, -1);
  sweep(nw2, +1, -1);
  sweep(se1, -1, +1);
  sweep(se2, -1, +1);
  sweep(sw1, +1, +1);
  sweep(sw2, +1, +1);

  // assemble one envelope per (tile, layer)
  env_.resize(static_cast<std::size_t>(nc) * nr * l);
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < nr; ++j) {
      const Box box{xe_[i], xe_[i + 1], ye_[j], ye_[j + 1]};
      for (int z = 1; z <= l; ++z) {
        std::vector<AffineFn2> fns;
        const auto add = [&](Cost ax, Cost ay, Cost c) {
          if (is_finite(c)) fns.push_back({ax, ay, c});
        };
        // family constants may be negative, so bypass the nonnegative adder
        const auto fadd = [](Cost a, Cost b) { return is_finite(a) ? a + b : kInfCost; };
        add(0, 0, at(inside, i, j, z));
        for (int zz = 1; zz <= l; ++zz) {
          add(0, -sc.vert[zz - 1], fadd(at(cn, i, j, zz), vp.between(z, zz)));
          add(0, sc.vert[zz - 1], fadd(at(cs, i, j, zz), vp.between(z, zz)));
          add(-sc.horiz[zz - 1], 0, fadd(at(ce, i, j, zz), vp.between(z, zz)));
          add(sc.horiz[zz - 1], 0, fadd(at(cw, i, j, zz), vp.between(z, zz)));
        }
        for (int zh = 1; zh <= l; ++zh) {
          for (int zv = 1; zv <= l; ++zv) {
            const Cost vq1 = vp.between(z, zh), vq2 = vp.between(z, zv);
            add(-sc.horiz[zh - 1], -sc.vert[zv - 1],
                cost_min(fadd(at2(ne1, i, j, zh, zv), vq1), fadd(at2(ne2, i, j, zh, zv), vq2)));
            add(sc.horiz[zh - 1], -sc.vert[zv - 1],
                cost_min(fadd(at2(nw1, i, j, zh, zv), vq1), fadd(at2(nw2, i, j, zh, zv), vq2)));
            add(-sc.horiz[zh - 1], sc.vert[zv - 1],
                cost_min(fadd(at2(se1, i, j, zh, zv), vq1), fadd(at2(se2, i, j, zh, zv), vq2)));
            add(sc.horiz[zh - 1], sc.vert[zv - 1],
                cost_min(fadd(at2(sw1, i, j, zh, zv), vq1), fadd(at2(sw2, i, j, zh, zv), vq2)));
          }
        }
        env_[(static_cast<std::size_t>(i) * nr + j) * l + z - 1] =
            EnvelopeIndex::build(box, std::move(fns));
      }
    }
  }
}

int SimpleOracle::col_of(Coord x) const {
  // last tile starting at or before x
  const auto it = std::upper_bound(xe_.begin(), xe_.end() - 1, x);
  return static_cast<int>(it - xe_.begin()) - 1;
}

int SimpleOracle::row_of(Coord y) const {
  const auto it = std::upper_bound(ye_.begin(), ye_.end() - 1, y);
  return static_cast<int>(it - ye_.begin()) - 1;
}

Cost SimpleOracle::query(Point3 v) const {
  return envelope(col_of(v.x), row_of(v.y), v.z).value_at(v.x, v.y);
}

}  // namespace gridroute
