#pragma once

#include <vector>

#include "gridroute/model.hpp"
#include "gridroute/subgraph.hpp"

namespace gridroute {

// Deliberately naive reference implementations: plain Dijkstra on explicit
// window vertices.  Every faster structure in this library is tested against
// these.

// Distance from each window vertex to the nearest target, using the full
// grid graph (no blocking) with edge costs from gc.  kInfCost where no
// target is reachable.  Throws if no target vertex lies in the window.
std::vector<Cost> oracle_distances(const GeneralCosts& gc, const TargetSet& targets,
                                   const Window& window);

struct OraclePath {
  Cost cost = kInfCost;              // kInfCost when T is unreachable from S
  std::vector<Point3> vertices;      // some shortest S-T path, S end first
};

// Shortest path between vertex sets inside a subgraph.  Deterministic: among
// all shortest paths it returns the one found by settling every optimal
// vertex and walking lexicographically smallest predecessors from the
// lexicographically smallest optimal target.
OraclePath oracle_shortest_path(const GeneralCosts& gc, const Subgraph& sg,
                                const std::vector<Point3>& sources,
                                const std::vector<Point3>& targets);

// Window that provably captures every shortest path to the targets from any
// of its vertices: the bounding box of the targets and of all grid cuts,
// padded by layers + 1 cells.  Beyond the outermost cuts all costs are
// constant, so wandering further out never pays.
Window padded_window(const GeneralCosts& gc, const TargetSet& targets);

}  // namespace gridroute
