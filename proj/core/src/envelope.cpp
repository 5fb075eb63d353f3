#include "gridroute/envelope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>

namespace gridroute {
namespace {

constexpr Cost kOffsetCap = Cost{1} << 62;

// crossing of two affine functions with a.slope > b.slope: a wins left of it,
// b wins right of it.
Rat cross1(const AffineFn1& a, const AffineFn1& b) {
  return Rat::make(i128(b.offset) - a.offset, i128(a.slope) - b.slope);
}

}  // namespace

// ---- FunctionSet -----------------------------------------------------------

FunctionSet::FunctionSet(Coord lo, Coord hi) : lo_(lo), hi_(hi) {
  if (lo > hi || lo < kUniverseLo || hi > kUniverseHi)
    throw std::invalid_argument("bad envelope domain");
}

FnInsertOutcome FunctionSet::insert_degenerate(const AffineFn1& g) {
  FnInsertOutcome out;
  const Cost v = g.at(lo_);
  if (!ents_.empty() && ents_[0].fn.at(lo_) <= v) return out;
  if (!ents_.empty()) {
    out.removed.push_back(ents_[0].id);
    ents_.clear();
  }
  out.inserted = true;
  out.id = next_id_++;
  ents_.push_back({g, out.id});
  return out;
}

FnInsertOutcome FunctionSet::insert(const AffineFn1& g) {
  if (std::llabs(g.slope) > kMaxFiniteCost || std::llabs(g.offset) > kOffsetCap)
    throw std::invalid_argument("function out of range");
  if (degenerate()) return insert_degenerate(g);

  // Rebuild the winning chain from the kept entries plus the newcomer; the
  // sets stay tiny, so the O(n) rebuild is the simplest correct route.
  std::vector<Entry> cand = ents_;
  const std::uint32_t gid = next_id_;
  cand.push_back({g, gid});
  std::sort(cand.begin(), cand.end(), [](const Entry& a, const Entry& b) {
    if (a.fn.slope != b.fn.slope) return a.fn.slope > b.fn.slope;
    if (a.fn.offset != b.fn.offset) return a.fn.offset < b.fn.offset;
    return a.id < b.id;
  });

  std::vector<Entry> chain;
  std::vector<Rat> enter;  // enter[k]: crossing where chain[k] takes over (k > 0)
  for (const Entry& e : cand) {
    if (!chain.empty() && chain.back().fn.slope == e.fn.slope) continue;  // higher offset loses
    Rat x{};
    while (!chain.empty()) {
      x = cross1(chain.back().fn, e.fn);
      if (chain.size() == 1 || rat_lt(enter.back(), x)) break;
      chain.pop_back();
      enter.pop_back();
      if (!chain.empty() && chain.back().fn.slope == e.fn.slope) {
        // slope duplicate resurfaced after pops; lower offset already in chain
        break;
      }
    }
    if (!chain.empty() && chain.back().fn.slope == e.fn.slope) continue;
    enter.push_back(chain.empty() ? Rat::of(lo_) : x);  // enter[0] is unused
    chain.push_back(e);
  }

  // Clip to the domain: keep entries winning a positive-length subinterval.
  std::vector<Entry> kept;
  const Rat dom_lo = Rat::of(lo_), dom_hi = Rat::of(hi_);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const Rat wl = k == 0 ? dom_lo : rat_max(enter[k], dom_lo);
    const Rat wh = k + 1 == chain.size() ? dom_hi : rat_min(enter[k + 1], dom_hi);
    if (rat_lt(wl, wh)) kept.push_back(chain[k]);
  }

  FnInsertOutcome out;
  std::vector<std::pair<std::uint32_t, Rat>> old_keys;
  old_keys.reserve(ents_.size());
  for (int k = 0; k < size(); ++k) old_keys.emplace_back(ents_[k].id, key(k));

  ents_ = std::move(kept);
  for (const Entry& e : ents_) {
    if (e.id == gid) {
      out.inserted = true;
      out.id = gid;
      ++next_id_;
    }
  }
  for (const auto& [oid, okey] : old_keys) {
    const auto nk = key_of(oid);
    if (!nk) {
      out.removed.push_back(oid);
      continue;
    }
    const int c = rat_cmp(*nk, okey);
    assert(c >= 0);  // keys never decrease
    if (c > 0) {
      assert(!out.key_increased);  // at most one key rises per insertion
      out.key_increased = oid;
    }
  }
  return out;
}

Rat FunctionSet::win_lo(int k) const {
  assert(k >= 0 && k < size());
  if (k == 0) return Rat::of(lo_);
  return cross1(ents_[k - 1].fn, ents_[k].fn);
}

Rat FunctionSet::win_hi(int k) const {
  assert(k >= 0 && k < size());
  if (k + 1 == size()) return Rat::of(hi_);
  return cross1(ents_[k].fn, ents_[k + 1].fn);
}

Rat FunctionSet::key(int k) const {
  const AffineFn1& f = ents_[k].fn;
  return rat_min(f.at(win_lo(k)), f.at(win_hi(k)));
}

std::optional<Rat> FunctionSet::key_of(std::uint32_t id) const {
  for (int k = 0; k < size(); ++k)
    if (ents_[k].id == id) return key(k);
  return std::nullopt;
}

int FunctionSet::index_at(Coord x) const {
  assert(!ents_.empty() && lo_ <= x && x <= hi_);
  int lo = 0, hi = size() - 1;
  while (lo < hi) {  // first entry whose winning interval ends at or after x
    const int mid = (lo + hi) / 2;
    if (rat_cmp(win_hi(mid), x) >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Cost FunctionSet::min_at(Coord x) const {
  if (ents_.empty()) return kInfCost;
  return ents_[index_at(x)].fn.at(x);
}

// ---- EnvelopeIndex ---------------------------------------------------------

namespace {

// Integer line A*x + B*y + C = 0.  A, B fit in 64 bits; C may need more.
struct Line {
  i128 A = 0, B = 0, C = 0;
};

Line bisector(const AffineFn2& f, const AffineFn2& g) {
  return {i128(f.ax) - g.ax, i128(f.ay) - g.ay, i128(f.c) - g.c};
}

// Intersection of two lines as a rational point with common denominator.
struct LineMeet {
  bool ok = false;
  RatPoint p;
};

LineMeet meet(const Line& a, const Line& b) {
  i128 d = a.A * b.B - b.A * a.B;
  if (d == 0) return {};
  i128 nx = a.B * b.C - b.B * a.C;
  i128 ny = a.C * b.A - b.C * a.A;
  if (d < 0) {
    d = -d;
    nx = -nx;
    ny = -ny;
  }
  return {true, {nx, ny, d}};
}

// sign of A*x + B*y + C at a rational point
int side(const Line& l, const RatPoint& v) {
  const I256 s =
      iadd256(iadd256(imul256(l.A, v.nx), imul256(l.B, v.ny)), imul256(l.C, v.d));
  return isign256(s);
}

struct PolyVert {
  RatPoint v;
  int edge;  // index of the line carrying the edge leaving this vertex
};

// Clip a convex polygon to the halfplane {line <= 0}; edges keep the index of
// the line they run along, so every vertex stays an exact two-line meet.
std::vector<PolyVert> clip_poly(const std::vector<PolyVert>& poly,
                                const std::vector<Line>& lines, int cut) {
  std::vector<PolyVert> out;
  const int n = static_cast<int>(poly.size());
  if (n == 0) return out;
  std::vector<int> sg(n);
  for (int i = 0; i < n; ++i) sg[i] = side(lines[cut], poly[i].v);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (sg[i] <= 0) out.push_back(poly[i]);
    if ((sg[i] <= 0) != (sg[j] <= 0)) {
      const LineMeet m = meet(lines[poly[i].edge], lines[cut]);
      assert(m.ok);
      // leaving: the new edge continues along the cutting line
      out.push_back({m.p, sg[i] <= 0 ? cut : poly[i].edge});
    }
  }
  return out;
}

bool poly_zero_area(const std::vector<PolyVert>& poly, const std::vector<Line>& lines) {
  if (poly.size() < 3) return true;
  const Line& l = lines[poly[0].edge];
  for (const PolyVert& pv : poly)
    if (side(l, pv.v) != 0) return false;
  return true;
}

// epsilon-aware crossing used when ordering functions just right of a slab
// edge: y(eps) = y0 + eps * dy
struct ECross {
  Rat y0;
  Rat dy;
};

int ecmp(const ECross& a, const ECross& b) {
  const int c = rat_cmp(a.y0, b.y0);
  return c != 0 ? c : rat_cmp(a.dy, b.dy);
}

}  // namespace

EnvelopeIndex EnvelopeIndex::build(const Box& box, std::vector<AffineFn2> fns) {
  if (!box.valid()) throw std::invalid_argument("invalid envelope box");
  if (fns.empty()) throw std::invalid_argument("no finite functions to index");
  for (const AffineFn2& f : fns) {
    if (std::llabs(f.ax) > kMaxFiniteCost || std::llabs(f.ay) > kMaxFiniteCost ||
        std::llabs(f.c) > kOffsetCap)
      throw std::invalid_argument("function out of range");
  }

  EnvelopeIndex e;
  e.built_ = true;
  e.box_ = box;
  e.fns_ = std::move(fns);
  const int n = static_cast<int>(e.fns_.size());

  const bool dx = box.x_lo == box.x_hi, dy = box.y_lo == box.y_hi;
  if (dx && dy) {
    e.mode_ = Mode::kPoint;
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (e.fns_[i].at(box.x_lo, box.y_lo) < e.fns_[best].at(box.x_lo, box.y_lo)) best = i;
    e.point_winner_ = best;
    return e;
  }
  if (dx || dy) {
    e.mode_ = dx ? Mode::kLineY : Mode::kLineX;
    e.line_env_ = dx ? FunctionSet(box.y_lo, box.y_hi) : FunctionSet(box.x_lo, box.x_hi);
    std::vector<int> id2idx;
    for (int i = 0; i < n; ++i) {
      const AffineFn2& f = e.fns_[i];
      const AffineFn1 g = dx ? AffineFn1{f.ay, Cost(i128(f.ax) * box.x_lo + f.c)}
                             : AffineFn1{f.ax, Cost(i128(f.ay) * box.y_lo + f.c)};
      const FnInsertOutcome r = e.line_env_.insert(g);
      if (r.inserted) id2idx.push_back(i);  // ids are assigned densely
    }
    for (const FunctionSet::Entry& en : e.line_env_.entries())
      e.line_ids_.push_back(id2idx[en.id]);
    return e;
  }

  e.mode_ = Mode::kFull;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  // Insert centrally-low functions first so later ones mostly fail the cheap
  // corner test instead of reaching the geometric path.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const i128 va = i128(e.fns_[a].ax) * (box.x_lo + box.x_hi) +
                    i128(e.fns_[a].ay) * (box.y_lo + box.y_hi) + 2 * i128(e.fns_[a].c);
    const i128 vb = i128(e.fns_[b].ax) * (box.x_lo + box.x_hi) +
                    i128(e.fns_[b].ay) * (box.y_lo + box.y_hi) + 2 * i128(e.fns_[b].c);
    if (va != vb) return va < vb;
    return a < b;
  });
  e.build_full(order);
  return e;
}

void EnvelopeIndex::build_full(const std::vector<int>& order) {
  breaks_ = {Rat::of(box_.x_lo)};
  lists_ = {{}};
  std::vector<int> alive;
  for (const int fi : order) {
    // corner prefilter: g everywhere at or below f means f never wins area
    bool dominated = false;
    for (const int g : alive) {
      bool below = true;
      for (const Coord cx : {box_.x_lo, box_.x_hi}) {
        for (const Coord cy : {box_.y_lo, box_.y_hi}) {
          const i128 vf = i128(fns_[fi].ax) * cx + i128(fns_[fi].ay) * cy + fns_[fi].c;
          const i128 vg = i128(fns_[g].ax) * cx + i128(fns_[g].ay) * cy + fns_[g].c;
          if (vg > vf) {
            below = false;
            break;
          }
        }
        if (!below) break;
      }
      if (below) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (insert_full(fi, alive)) alive.push_back(fi);
  }
  compact();
}

bool EnvelopeIndex::insert_full(int fi, const std::vector<int>& alive) {
  // Lines: 0..3 are the box edges (right, top, left, bottom as x<=x_hi etc.),
  // then one bisector per alive function.
  std::vector<Line> lines;
  lines.push_back({1, 0, -i128(box_.x_hi)});   // x - x_hi <= 0
  lines.push_back({0, 1, -i128(box_.y_hi)});   // y - y_hi <= 0
  lines.push_back({-1, 0, i128(box_.x_lo)});   // x_lo - x <= 0
  lines.push_back({0, -1, i128(box_.y_lo)});   // y_lo - y <= 0

  std::vector<PolyVert> poly = {
      {{box_.x_lo, box_.y_lo, 1}, 3},
      {{box_.x_hi, box_.y_lo, 1}, 0},
      {{box_.x_hi, box_.y_hi, 1}, 1},
      {{box_.x_lo, box_.y_hi, 1}, 2},
  };
  // The winning region of fi is the intersection of {fi <= g}.
  for (const int g : alive) {
    lines.push_back(bisector(fns_[fi], fns_[g]));
    poly = clip_poly(poly, lines, static_cast<int>(lines.size()) - 1);
    if (poly.empty()) return false;
  }
  if (poly_zero_area(poly, lines)) return false;

  Rat xa = poly[0].v.x(), xb = poly[0].v.x();
  for (const PolyVert& pv : poly) {
    xa = rat_min(xa, pv.v.x());
    xb = rat_max(xb, pv.v.x());
  }

  // Members of slabs the new region can touch; only their pairwise features
  // can surface as new slab boundaries.
  std::set<int> us = {fi};
  const Rat end_x = Rat::of(box_.x_hi);
  for (std::size_t k = 0; k < breaks_.size(); ++k) {
    const Rat& s = breaks_[k];
    const Rat& t = k + 1 < breaks_.size() ? breaks_[k + 1] : end_x;
    if (rat_lt(xa, t) && rat_lt(s, xb))
      for (const int m : lists_[k]) us.insert(m);
  }
  const std::vector<int> u(us.begin(), us.end());

  std::vector<Rat> xs;
  for (const PolyVert& pv : poly) xs.push_back(pv.v.x());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const Line bij = bisector(fns_[u[i]], fns_[u[j]]);
      for (const int edge : {1, 3}) {  // y = y_hi / y = y_lo
        const LineMeet m = meet(bij, lines[edge]);
        if (m.ok) xs.push_back(m.p.x());
      }
      for (std::size_t k = j + 1; k < u.size(); ++k) {
        const LineMeet m = meet(bij, bisector(fns_[u[i]], fns_[u[k]]));
        if (m.ok) xs.push_back(m.p.x());
      }
    }
  }

  for (const Rat& x : xs) {
    if (rat_cmp(x, xa) < 0 || rat_cmp(x, xb) > 0) continue;
    if (rat_cmp(x, box_.x_lo) <= 0 || rat_cmp(x, box_.x_hi) >= 0) continue;
    // locate the slab containing x; split it unless x is already a break
    int lo = 0, hi = static_cast<int>(breaks_.size()) - 1;
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      if (rat_cmp(breaks_[mid], x) <= 0)
        lo = mid;
      else
        hi = mid - 1;
    }
    if (rat_eq(breaks_[lo], x)) continue;
    breaks_.insert(breaks_.begin() + lo + 1, x);
    lists_.insert(lists_.begin() + lo + 1, lists_[lo]);
  }

  bool inserted = false;
  for (std::size_t k = 0; k < breaks_.size(); ++k) {
    const Rat& s = breaks_[k];
    const Rat& t = k + 1 < breaks_.size() ? breaks_[k + 1] : end_x;
    if (!(rat_lt(xa, t) && rat_lt(s, xb))) continue;
    std::vector<int> cands = lists_[k];
    cands.push_back(fi);
    lists_[k] = rebuild_slab(std::move(cands), s);
    for (const int m : lists_[k]) inserted |= m == fi;
  }
  return inserted;
}

std::vector<int> EnvelopeIndex::rebuild_slab(std::vector<int> cands, const Rat& s) const {
  // Order the winners along y just right of x = s.  Intercepts at s share the
  // denominator s.den, so the chain arithmetic stays exact and cheap.
  const i128 Ns = s.num, Ds = s.den;
  auto icept = [&](int f) { return i128(fns_[f].ax) * Ns + i128(fns_[f].c) * Ds; };

  std::sort(cands.begin(), cands.end(), [&](int a, int b) {
    if (fns_[a].ay != fns_[b].ay) return fns_[a].ay > fns_[b].ay;
    const i128 ia = icept(a), ib = icept(b);
    if (ia != ib) return ia < ib;
    if (fns_[a].ax != fns_[b].ax) return fns_[a].ax < fns_[b].ax;
    return a < b;
  });

  auto ecross = [&](int g, int h) {  // g before h in ay-descending order
    const i128 day = i128(fns_[g].ay) - fns_[h].ay;
    assert(day > 0);
    return ECross{Rat::make(icept(h) - icept(g), day * Ds),
                  Rat::make(i128(fns_[h].ax) - fns_[g].ax, day)};
  };

  std::vector<int> chain;
  std::vector<ECross> enter;
  for (const int f : cands) {
    if (!chain.empty() && fns_[chain.back()].ay == fns_[f].ay) continue;
    ECross x{};
    while (!chain.empty()) {
      x = ecross(chain.back(), f);
      if (chain.size() == 1 || ecmp(enter.back(), x) < 0) break;
      chain.pop_back();
      enter.pop_back();
      if (!chain.empty() && fns_[chain.back()].ay == fns_[f].ay) break;
    }
    if (!chain.empty() && fns_[chain.back()].ay == fns_[f].ay) continue;
    enter.push_back(chain.empty() ? ECross{} : x);  // enter[0] is unused
    chain.push_back(f);
  }

  const ECross bot{Rat::of(box_.y_lo), Rat{0, 1}};
  const ECross top{Rat::of(box_.y_hi), Rat{0, 1}};
  std::vector<int> kept;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const ECross& wl = k == 0 ? bot : (ecmp(enter[k], bot) > 0 ? enter[k] : bot);
    const ECross& wh = k + 1 == chain.size() ? top : (ecmp(enter[k + 1], top) < 0 ? enter[k + 1] : top);
    if (ecmp(wl, wh) < 0) kept.push_back(chain[k]);
  }
  return kept;
}

void EnvelopeIndex::compact() {
  std::vector<Rat> nb;
  std::vector<std::vector<int>> nl;
  for (std::size_t k = 0; k < breaks_.size(); ++k) {
    if (!nl.empty() && nl.back() == lists_[k]) continue;
    nb.push_back(breaks_[k]);
    nl.push_back(std::move(lists_[k]));
  }
  breaks_ = std::move(nb);
  lists_ = std::move(nl);
}

int EnvelopeIndex::slab_of(const Rat& x) const {
  int lo = 0, hi = static_cast<int>(breaks_.size()) - 1;
  while (lo < hi) {  // last slab starting at or before x
    const int mid = (lo + hi + 1) / 2;
    if (rat_cmp(breaks_[mid], x) <= 0)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

int EnvelopeIndex::locate_in_list(const std::vector<int>& list, i128 ynum, i128 yden,
                                  const Rat& sx) const {
  // first member whose upper crossing is at or above y
  int lo = 0, hi = static_cast<int>(list.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    const int g = list[mid], h = list[mid + 1];
    const i128 day = i128(fns_[g].ay) - fns_[h].ay;
    const i128 cn = (i128(fns_[h].ax) - fns_[g].ax) * sx.num + (i128(fns_[h].c) - fns_[g].c) * sx.den;
    // y <= cn / (day * sx.den) ?
    if (cmp_ab_cd(ynum, day * sx.den, cn, yden) <= 0)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

int EnvelopeIndex::winner_at(Coord x, Coord y) const {
  assert(built_ && box_.contains(x, y));
  switch (mode_) {
    case Mode::kPoint:
      return point_winner_;
    case Mode::kLineY:
      return line_ids_[line_env_.index_at(y)];
    case Mode::kLineX:
      return line_ids_[line_env_.index_at(x)];
    case Mode::kFull: {
      const Rat rx = Rat::of(x);
      const std::vector<int>& list = lists_[slab_of(rx)];
      return list[locate_in_list(list, y, 1, rx)];
    }
    default:
      throw std::logic_error("envelope not built");
  }
}

Cost EnvelopeIndex::value_at(Coord x, Coord y) const { return fns_[winner_at(x, y)].at(x, y); }

int EnvelopeIndex::cell_count() const {
  switch (mode_) {
    case Mode::kPoint:
      return 1;
    case Mode::kLineY:
    case Mode::kLineX:
      return line_env_.size();
    case Mode::kFull: {
      std::set<int> w;
      for (const std::vector<int>& l : lists_) w.insert(l.begin(), l.end());
      return static_cast<int>(w.size());
    }
    default:
      return 0;
  }
}

int EnvelopeIndex::cmp_at_point(int fi, int fj, const RatPoint& p) const {
  return side(bisector(fns_[fi], fns_[fj]), p);
}

int EnvelopeIndex::winner_at_point(const RatPoint& p) const {
  assert(built_);
  switch (mode_) {
    case Mode::kPoint:
      return point_winner_;
    case Mode::kLineY:
    case Mode::kLineX: {
      // locate along the free axis by comparing with entry boundaries
      const Rat t = mode_ == Mode::kLineY ? p.y() : p.x();
      const int n = line_env_.size();
      int k = 0;
      while (k + 1 < n && rat_cmp(line_env_.win_hi(k), t) < 0) ++k;
      return line_ids_[k];
    }
    case Mode::kFull: {
      const Rat rx = p.x();
      const std::vector<int>& list = lists_[slab_of(rx)];
      return list[locate_in_list(list, p.ny, p.d, rx)];
    }
    default:
      throw std::logic_error("envelope not built");
  }
}

std::vector<RatPoint> EnvelopeIndex::cell_vertices() const {
  std::vector<RatPoint> out;
  auto on_line = [&](const Rat& t) {
    if (mode_ == Mode::kLineY)
      out.push_back({i128(box_.x_lo) * t.den, t.num, t.den});
    else
      out.push_back({t.num, i128(box_.y_lo) * t.den, t.den});
  };
  switch (mode_) {
    case Mode::kPoint:
      out.push_back({box_.x_lo, box_.y_lo, 1});
      break;
    case Mode::kLineY:
    case Mode::kLineX: {
      for (int k = 0; k < line_env_.size(); ++k) {
        on_line(line_env_.win_lo(k));
        if (k + 1 == line_env_.size()) on_line(line_env_.win_hi(k));
      }
      break;
    }
    case Mode::kFull: {
      for (std::size_t k = 0; k < lists_.size(); ++k) {
        for (const Rat& x :
             {breaks_[k], k + 1 < lists_.size() ? breaks_[k + 1] : Rat::of(box_.x_hi)}) {
          out.push_back({x.num, i128(box_.y_lo) * x.den, x.den});
          out.push_back({x.num, i128(box_.y_hi) * x.den, x.den});
          const std::vector<int>& list = lists_[k];
          for (std::size_t m = 0; m + 1 < list.size(); ++m) {
            const int g = list[m], h = list[m + 1];
            const i128 day = i128(fns_[g].ay) - fns_[h].ay;
            const i128 cn =
                (i128(fns_[h].ax) - fns_[g].ax) * x.num + (i128(fns_[h].c) - fns_[g].c) * x.den;
            // y = cn / (day * x.den); keep it when inside the box
            const Rat yy = Rat::make(cn, day * x.den);
            if (rat_cmp(yy, box_.y_lo) < 0 || rat_cmp(yy, box_.y_hi) > 0) continue;
            out.push_back({x.num * day, cn, x.den * day});
          }
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace gridroute
