#include "gridroute/router.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

#include "grid_step.hpp"

namespace gridroute {

namespace {

using detail::CostView;
using detail::neighbor;

using HeapItem = std::pair<Cost, std::int64_t>;
using Heap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

std::int64_t us_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

SearchResult dijkstra_reduced(const GeneralCosts& gc, const Subgraph& sg,
                              const std::vector<Point3>& sources, const TargetSet& targets,
                              const PotentialProvider& pi) {
  const Window& win = sg.window();
  if (!win.valid()) throw std::invalid_argument("dijkstra_reduced: bad window");
  if (targets.empty()) throw std::invalid_argument("dijkstra_reduced: no targets");
  CostView view(gc, win);

  const std::size_t n = static_cast<std::size_t>(win.vertex_count());
  std::vector<Cost> dist(n, kInfCost);
  std::vector<Cost> pot(n, -1);  // lazily filled; potentials are >= 0
  std::vector<std::uint8_t> settled(n, 0);
  SearchResult out;

  auto pot_at = [&](std::size_t idx, Point3 p) -> Cost {
    if (pot[idx] < 0) pot[idx] = pi.at(p);
    return pot[idx];
  };

  Heap heap;
  for (const Point3& s : sources) {
    if (!sg.has_vertex(s)) continue;
    const std::size_t idx = static_cast<std::size_t>(win.index(s));
    if (dist[idx] == 0) continue;
    const Cost ps = pot_at(idx, s);
    if (!is_finite(ps)) continue;  // cannot reach any target at all
    dist[idx] = 0;
    ++out.stats.labeled;
    heap.emplace(ps, idx);
  }

  Cost best = kInfCost;          // best target distance (== its key: pi is 0 there)
  Point3 best_pt{0, 0, 0};
  while (!heap.empty()) {
    auto [key, idx64] = heap.top();
    if (best != kInfCost && key > best) break;  // keep settling ties at the optimum
    heap.pop();
    const std::size_t idx = static_cast<std::size_t>(idx64);
    if (settled[idx]) continue;
    const Point3 p = win.point(idx64);
    if (key != cost_add(dist[idx], pot[idx])) continue;  // stale entry
    settled[idx] = 1;
    ++out.stats.popped;
    if (targets.contains(p)) {
      if (dist[idx] < best || (dist[idx] == best && p < best_pt)) {
        best = dist[idx];
        best_pt = p;
      }
      continue;  // nothing beyond a target can improve another target
    }
    for (int dir = 0; dir < 6; ++dir) {
      const Point3 nb = neighbor(p, dir);
      if (!sg.has_vertex(nb)) continue;
      if (sg.edges_blocked() && !sg.has_edge(Edge(p, nb))) continue;
      const Cost ec = view.step_cost(p, dir);
      if (!is_finite(ec)) continue;
      const std::size_t nidx = static_cast<std::size_t>(win.index(nb));
      const Cost pn = pot_at(nidx, nb);
      if (!is_finite(pn)) continue;
      if (ec - pot[idx] + pn < 0) throw std::runtime_error("infeasible potential");
      const Cost nd = cost_add(dist[idx], ec);
      if (nd < dist[nidx]) {
        if (dist[nidx] == kInfCost) ++out.stats.labeled;
        dist[nidx] = nd;
        heap.emplace(cost_add(nd, pn), static_cast<std::int64_t>(nidx));
      }
    }
  }

  if (best == kInfCost) return out;
  out.cost = best;

  // Lexicographically smallest backward walk over settled exact predecessors.
  std::vector<Point3> rev{best_pt};
  Point3 cur = best_pt;
  while (dist[static_cast<std::size_t>(win.index(cur))] != 0) {
    const Cost dc = dist[static_cast<std::size_t>(win.index(cur))];
    Point3 pick{0, 0, 0};
    bool have = false;
    for (int dir = 0; dir < 6; ++dir) {
      const Point3 nb = neighbor(cur, dir);
      if (!sg.has_vertex(nb)) continue;
      if (sg.edges_blocked() && !sg.has_edge(Edge(cur, nb))) continue;
      const Cost ec = view.step_cost(cur, dir);
      if (!is_finite(ec)) continue;
      const std::size_t nidx = static_cast<std::size_t>(win.index(nb));
      if (settled[nidx] && cost_add(dist[nidx], ec) == dc && (!have || nb < pick)) {
        pick = nb;
        have = true;
      }
    }
    if (!have) throw std::logic_error("dijkstra_reduced: broken predecessor chain");
    rev.push_back(pick);
    cur = pick;
  }
  out.path.assign(rev.rbegin(), rev.rend());
  return out;
}

RouteResult route_net(const GeneralCosts& gc, const Subgraph& sg,
                      const std::vector<Rect>& pins, const PotentialConfig& pc) {
  if (pins.empty()) throw std::invalid_argument("route_net: no pins");
  auto push_vertices = [&](const Rect& r, std::vector<Point3>& out) {
    for (Coord y = r.y_lo; y <= r.y_hi; ++y)
      for (Coord x = r.x_lo; x <= r.x_hi; ++x) out.push_back({x, y, r.z});
  };
  for (const Rect& r : pins) {
    if (!r.valid()) throw std::invalid_argument("route_net: invalid pin rect");
    std::vector<Point3> vs;
    push_vertices(r, vs);
    for (const Point3& p : vs)
      if (!sg.has_vertex(p)) throw std::invalid_argument("route_net: pin outside the subgraph");
  }

  // Overlapping pins start out connected.
  auto overlap = [](const Rect& a, const Rect& b) {
    return a.z == b.z && a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi &&
           b.y_lo <= a.y_hi;
  };
  std::vector<int> comp(pins.size());
  for (std::size_t i = 0; i < pins.size(); ++i) {
    comp[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (overlap(pins[j], pins[i])) {
        const int from = comp[i], to = comp[j];
        for (std::size_t k = 0; k <= i; ++k)
          if (comp[k] == from) comp[k] = to;
      }
  }

  RouteResult rr;
  rr.connected = true;
  std::vector<Point3> active;
  for (std::size_t i = 0; i < pins.size(); ++i)
    if (comp[i] == comp[0]) push_vertices(pins[i], active);

  while (true) {
    TargetSet targets;
    for (std::size_t i = 0; i < pins.size(); ++i)
      if (comp[i] != comp[0]) targets.rects.push_back(pins[i]);
    if (targets.empty()) break;

    auto t0 = std::chrono::steady_clock::now();
    const auto pi = make_potential(pc.flavor, gc, targets, pc.eps_num, pc.eps_den);
    rr.prep_us += us_since(t0);

    t0 = std::chrono::steady_clock::now();
    const SearchResult res = dijkstra_reduced(gc, sg, active, targets, *pi);
    rr.search_us += us_since(t0);
    rr.search.labeled += res.stats.labeled;
    rr.search.popped += res.stats.popped;
    if (res.cost == kInfCost) {
      rr.connected = false;
      break;
    }
    rr.cost += res.cost;
    rr.paths.push_back(res.path);
    const Point3 terminal = res.path.back();
    for (std::size_t i = 0; i < pins.size(); ++i)
      if (comp[i] != comp[0] && pins[i].contains(terminal)) {
        const int from = comp[i];
        for (std::size_t k = 0; k < pins.size(); ++k)
          if (comp[k] == from) {
            comp[k] = comp[0];
            push_vertices(pins[k], active);
          }
      }
    for (const Point3& v : res.path) active.push_back(v);
  }
  return rr;
}

GeneralCosts discounted_costs(const GeneralCosts& gc, const std::vector<Rect>& own,
                              int delta_num, int delta_den) {
  if (delta_num < 1 || delta_den < 1 || delta_num > delta_den)
    throw std::invalid_argument("discount must be a fraction in (0, 1]");
  TargetSet cover;
  cover.rects = own;
  GeneralCosts ref = refine_grid(gc, cover);
  const TileGrid& g = ref.grid();
  const int l = g.layers();

  Cost mx = 0;
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j)
      for (int z = 1; z <= l; ++z) {
        if (is_finite(ref.h(i, j, z))) mx = std::max(mx, ref.h(i, j, z));
        if (is_finite(ref.v(i, j, z))) mx = std::max(mx, ref.v(i, j, z));
        if (z < l && is_finite(ref.via(i, j, z))) mx = std::max(mx, ref.via(i, j, z));
      }
  if (mx * static_cast<Cost>(delta_den) > kMaxFiniteCost)
    throw std::invalid_argument("discount scaling overflows the cost range");

  // Tiles covered by the net's own reservations, per layer.
  std::vector<std::uint8_t> cov(static_cast<std::size_t>(g.cols()) * g.rows() * l, 0);
  auto cv = [&](int i, int j, int z) -> std::uint8_t& {
    return cov[(static_cast<std::size_t>(i) * g.rows() + j) * l + (z - 1)];
  };
  for (const Rect& r : own)
    for (int i = 0; i < g.cols(); ++i) {
      if (g.x_lo(i) < r.x_lo || g.x_hi(i) > r.x_hi) continue;
      for (int j = 0; j < g.rows(); ++j)
        if (r.y_lo <= g.y_lo(j) && g.y_hi(j) <= r.y_hi) cv(i, j, r.z) = 1;
    }

  GeneralCosts out = ref;
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j)
      for (int z = 1; z <= l; ++z) {
        const Cost fh = delta_num, fd = delta_den;
        if (is_finite(ref.h(i, j, z))) out.h(i, j, z) = ref.h(i, j, z) * (cv(i, j, z) ? fh : fd);
        if (is_finite(ref.v(i, j, z))) out.v(i, j, z) = ref.v(i, j, z) * (cv(i, j, z) ? fh : fd);
        if (z < l && is_finite(ref.via(i, j, z)))
          out.via(i, j, z) =
              ref.via(i, j, z) * (cv(i, j, z) && cv(i, j, z + 1) ? fh : fd);
      }
  return out;
}

void block_rect_edges(Subgraph& sg, const std::vector<Rect>& rects) {
  auto in_union = [&](Point3 p) {
    for (const Rect& r : rects)
      if (r.contains(p)) return true;
    return false;
  };
  const Window& win = sg.window();
  for (const Rect& r : rects) {
    const Coord xl = std::max(r.x_lo, win.x_lo), xh = std::min(r.x_hi, win.x_hi);
    const Coord yl = std::max(r.y_lo, win.y_lo), yh = std::min(r.y_hi, win.y_hi);
    if (r.z < 1 || r.z > win.layers) continue;
    for (Coord y = yl; y <= yh; ++y)
      for (Coord x = xl; x <= xh; ++x) {
        const Point3 p{x, y, r.z};
        if (x + 1 <= r.x_hi) sg.block_edge(Edge(p, {x + 1, y, r.z}));
        if (y + 1 <= r.y_hi) sg.block_edge(Edge(p, {x, y + 1, r.z}));
        if (r.z + 1 <= win.layers && in_union({x, y, r.z + 1}))
          sg.block_edge(Edge(p, {x, y, r.z + 1}));
      }
  }
}

}  // namespace gridroute
