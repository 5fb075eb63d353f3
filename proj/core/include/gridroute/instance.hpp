#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridroute/model.hpp"
#include "gridroute/subgraph.hpp"

namespace gridroute {

// One net of an instance: pin rectangles to connect and the rectangles this
// net reserved in a previous routing pass.  Edges with both endpoints inside
// a reservation get the instance's discount when the net is re-routed;
// reservations of distinct nets never share an edge.
struct NetSpec {
  std::string name;
  std::vector<Rect> pins;
  std::vector<Rect> reserved;

  friend bool operator==(const NetSpec&, const NetSpec&) = default;
};

// A routing problem: tile costs, the window the search is confined to,
// blocked vertex rectangles, the nets, the reservation discount delta and
// the layer-tree exponent epsilon used by the strongest potential.
struct Instance {
  GeneralCosts costs;
  Window window;
  std::vector<Rect> blocked;
  std::vector<NetSpec> nets;
  int delta_num = 3, delta_den = 4;
  int eps_num = 1, eps_den = 2;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// JSON text format, one document per instance.  Infinite costs are spelled
// "inf", fractions like delta are spelled "3/4", and tile costs are stored
// sparsely against the most common (h, v, via) triple.  parse_instance
// throws std::runtime_error with a field path (and the line for syntax
// errors); serialize_instance produces a stable, diff-friendly layout that
// parses back to an equal instance.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// The graph the nets are routed in: the declared window minus the blocked
// rectangles.
Subgraph instance_subgraph(const Instance& inst);

// Knobs for the random instance generator.
struct GenConfig {
  std::uint64_t seed = 1;
  int p = 4, q = 4;            // interior x / y cuts
  int l = 3;                   // layers
  int t = 2;                   // pins per net
  int nets = 1;
  double block_density = 0.2;  // chance an interior tile costs infinity
  Cost cost_max = 20;          // finite tile costs are drawn from [1, cost_max]
  double reserve_keep = 0.5;   // chance a pre-routed straight run is reserved
};

// Deterministic pseudo-random instance: p (q) distinct cuts inside a window
// of width 8(p+1) (height 8(q+1)), interior tiles infinite with probability
// block_density and uniformly priced otherwise, and per net t pins placed so
// that they can reach each other.  Each net is then pre-routed with the
// cheap potential and the straight runs of those paths are kept as
// reservations with probability reserve_keep, skipping runs that would
// collide with another net's reservations.  The same config always produces
// the same instance, byte for byte.
Instance generate_instance(const GenConfig& cfg);

}  // namespace gridroute
