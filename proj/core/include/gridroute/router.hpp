#pragma once

#include <cstdint>
#include <vector>

#include "gridroute/model.hpp"
#include "gridroute/potential.hpp"
#include "gridroute/subgraph.hpp"

namespace gridroute {

struct SearchStats {
  std::int64_t labeled = 0;  // distinct vertices that ever received a label
  std::int64_t popped = 0;   // vertices settled
};

struct SearchResult {
  Cost cost = kInfCost;        // kInfCost when no target is reachable
  std::vector<Point3> path;    // source end first; empty when unreachable
  SearchStats stats;
};

// Goal-oriented Dijkstra with reduced costs c(e) - pi(v) + pi(w) on the
// subgraph.  Settles every vertex whose key is at most the best target key,
// so among optimal paths the result is the one through lexicographically
// smallest predecessors from the lexicographically smallest optimal target --
// identical for every feasible potential.  Throws std::runtime_error if a
// negative reduced cost shows up (an infeasible potential).
SearchResult dijkstra_reduced(const GeneralCosts& gc, const Subgraph& sg,
                              const std::vector<Point3>& sources, const TargetSet& targets,
                              const PotentialProvider& pi);

struct PotentialConfig {
  Flavor flavor = Flavor::kZero;
  int eps_num = 1, eps_den = 2;  // layer-interval tree exponent (kGeneral only)
};

struct RouteResult {
  bool connected = false;
  Cost cost = 0;                           // total over all connections
  std::vector<std::vector<Point3>> paths;  // one per connection, in merge order
  SearchStats search;                      // summed over connections
  std::int64_t prep_us = 0;                // potential construction time
  std::int64_t search_us = 0;
};

// Connects all pins of a net; every pin is a rectangle of vertices, and
// overlapping pins start out in one component.  Starting from the first
// pin's component, repeatedly searches from the connected component to the
// union of still-unconnected pins and merges in the path found -- the
// nearest remaining component is always connected next.  A fresh potential
// is built per search because the target set changes.
RouteResult route_net(const GeneralCosts& gc, const Subgraph& sg,
                      const std::vector<Rect>& pins, const PotentialConfig& pc);

// Costs a net sees when reservations are active: the grid is refined by the
// reservation rectangles, every cost is scaled by delta_den, and tiles
// covered by the net's own reservations are discounted to delta_num times
// the original instead.  Equivalently, an edge with both endpoints inside
// the net's reservations costs delta * c after rescaling.  Throws if the
// scaled costs leave the exact cost range or delta is not in (0, 1].
GeneralCosts discounted_costs(const GeneralCosts& gc, const std::vector<Rect>& own,
                              int delta_num, int delta_den);

// Removes every edge (vias included) whose endpoints both lie inside the
// given rectangles; used to hide other nets' reservations.
void block_rect_edges(Subgraph& sg, const std::vector<Rect>& rects);

}  // namespace gridroute
