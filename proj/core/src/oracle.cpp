#include "gridroute/oracle.hpp"

#include "grid_step.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gridroute {

namespace {

using detail::CostView;
using detail::neighbor;

using HeapItem = std::pair<Cost, std::int64_t>;
using Heap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

}  // namespace

std::vector<Cost> oracle_distances(const GeneralCosts& gc, const TargetSet& targets,
                                   const Window& window) {
  if (!window.valid()) throw std::invalid_argument("oracle_distances: bad window");
  CostView view(gc, window);
  std::vector<Cost> dist(static_cast<std::size_t>(window.vertex_count()), kInfCost);
  Heap heap;
  bool any = false;
  for (const Rect& r : targets.rects) {
    const Coord xl = std::max(r.x_lo, window.x_lo), xh = std::min(r.x_hi, window.x_hi);
    const Coord yl = std::max(r.y_lo, window.y_lo), yh = std::min(r.y_hi, window.y_hi);
    if (xl > xh || yl > yh || r.z < 1 || r.z > window.layers) continue;
    for (Coord y = yl; y <= yh; ++y)
      for (Coord x = xl; x <= xh; ++x) {
        const std::int64_t idx = window.index({x, y, r.z});
        if (dist[static_cast<std::size_t>(idx)] != 0) {
          dist[static_cast<std::size_t>(idx)] = 0;
          heap.emplace(0, idx);
        }
        any = true;
      }
  }
  if (!any) throw std::invalid_argument("no target in window");

  while (!heap.empty()) {
    auto [d, idx] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(idx)]) continue;
    const Point3 p = window.point(idx);
    for (int dir = 0; dir < 6; ++dir) {
      const Point3 nb = neighbor(p, dir);
      if (!window.contains(nb)) continue;
      const Cost ec = view.step_cost(p, dir);
      if (ec == kInfCost) continue;
      const Cost nd = cost_add(d, ec);
      const std::int64_t nidx = window.index(nb);
      if (nd < dist[static_cast<std::size_t>(nidx)]) {
        dist[static_cast<std::size_t>(nidx)] = nd;
        heap.emplace(nd, nidx);
      }
    }
  }
  return dist;
}

OraclePath oracle_shortest_path(const GeneralCosts& gc, const Subgraph& sg,
                                const std::vector<Point3>& sources,
                                const std::vector<Point3>& targets) {
  const Window& win = sg.window();
  CostView view(gc, win);
  std::vector<Cost> dist(static_cast<std::size_t>(win.vertex_count()), kInfCost);
  std::vector<std::uint8_t> settled(dist.size(), 0);
  Heap heap;
  for (const Point3& s : sources) {
    if (!sg.has_vertex(s)) continue;
    const std::int64_t idx = win.index(s);
    if (dist[static_cast<std::size_t>(idx)] != 0) {
      dist[static_cast<std::size_t>(idx)] = 0;
      heap.emplace(0, idx);
    }
  }
  std::vector<std::uint8_t> is_target(dist.size(), 0);
  for (const Point3& t : targets)
    if (sg.has_vertex(t)) is_target[static_cast<std::size_t>(win.index(t))] = 1;

  Cost best = kInfCost;
  while (!heap.empty()) {
    auto [d, idx] = heap.top();
    if (best != kInfCost && d > best) break;  // all optimal vertices settled
    heap.pop();
    if (d != dist[static_cast<std::size_t>(idx)] || settled[static_cast<std::size_t>(idx)])
      continue;
    settled[static_cast<std::size_t>(idx)] = 1;
    if (is_target[static_cast<std::size_t>(idx)] && best == kInfCost) best = d;
    const Point3 p = win.point(idx);
    for (int dir = 0; dir < 6; ++dir) {
      const Point3 nb = neighbor(p, dir);
      if (!sg.has_vertex(nb) || !sg.has_edge(Edge(p, nb))) continue;
      const Cost ec = view.step_cost(p, dir);
      if (ec == kInfCost) continue;
      const Cost nd = cost_add(d, ec);
      const std::int64_t nidx = win.index(nb);
      if (nd < dist[static_cast<std::size_t>(nidx)]) {
        dist[static_cast<std::size_t>(nidx)] = nd;
        heap.emplace(nd, nidx);
      }
    }
  }

  OraclePath out;
  if (best == kInfCost) return out;
  out.cost = best;

  Point3 end{0, 0, 0};
  bool found = false;
  for (const Point3& t : targets) {
    if (!sg.has_vertex(t)) continue;
    const std::size_t idx = static_cast<std::size_t>(win.index(t));
    if (settled[idx] && dist[idx] == best && (!found || t < end)) {
      end = t;
      found = true;
    }
  }
  // Walk to a source through lexicographically smallest settled predecessors.
  std::vector<Point3> rev{end};
  Point3 cur = end;
  while (dist[static_cast<std::size_t>(win.index(cur))] != 0) {
    const Cost dc = dist[static_cast<std::size_t>(win.index(cur))];
    Point3 pick{0, 0, 0};
    bool have = false;
    for (int dir = 0; dir < 6; ++dir) {
      const Point3 nb = neighbor(cur, dir);
      if (!sg.has_vertex(nb) || !sg.has_edge(Edge(cur, nb))) continue;
      const Cost ec = view.step_cost(cur, dir);
      if (ec == kInfCost) continue;
      const std::size_t nidx = static_cast<std::size_t>(win.index(nb));
      if (settled[nidx] && cost_add(dist[nidx], ec) == dc && (!have || nb < pick)) {
        pick = nb;
        have = true;
      }
    }
    if (!have) throw std::logic_error("oracle_shortest_path: broken predecessor chain");
    rev.push_back(pick);
    cur = pick;
  }
  out.vertices.assign(rev.rbegin(), rev.rend());
  return out;
}

Window padded_window(const GeneralCosts& gc, const TargetSet& targets) {
  if (targets.empty()) throw std::invalid_argument("padded_window: no targets");
  Coord xl = kCoordLimit, xh = -kCoordLimit, yl = kCoordLimit, yh = -kCoordLimit;
  auto take = [&](Coord x0, Coord x1, Coord y0, Coord y1) {
    xl = std::min(xl, x0);
    xh = std::max(xh, x1);
    yl = std::min(yl, y0);
    yh = std::max(yh, y1);
  };
  for (const Rect& r : targets.rects) take(r.x_lo, r.x_hi, r.y_lo, r.y_hi);
  const TileGrid& g = gc.grid();
  if (!g.xs().empty()) take(g.xs().front(), g.xs().back(), yl, yh);
  if (!g.ys().empty()) take(xl, xh, g.ys().front(), g.ys().back());
  const Coord pad = g.layers() + 1;
  return {xl - pad, xh + pad, yl - pad, yh + pad, g.layers()};
}

}  // namespace gridroute
