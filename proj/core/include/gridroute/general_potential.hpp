#pragma once

#include <cstdint>
#include <vector>

#include "gridroute/envelope.hpp"
#include "gridroute/model.hpp"
#include "gridroute/simple_potential.hpp"

namespace gridroute {

struct LabelStats {
  std::int64_t pops = 0;        // function pops (the bounded quantity)
  std::int64_t inserts = 0;     // attempted insertions during the sweep
  std::int64_t corner_pops = 0;  // cut-intersection labels settled
  int max_set = 0;              // largest function set seen
  bool keys_monotone = true;    // popped keys never decreased
};

// Distance envelopes on horizontal tile-boundary segments.  Segment (i, m, z)
// is the piece of the m-th interior horizontal cut line inside column i on
// layer z; after the sweep its function set is the exact distance to the
// targets as a function of x on the whole closed segment.  Run on the
// transposed costs it labels the vertical segments instead.
//
// Affine functions cannot express a value that is pinned to a single segment
// endpoint, which is what a propagation across a cut produces when the
// receiving column only admits infinite run costs.  Those values are carried
// by explicit scalar labels on the cut intersections instead: popped
// functions deposit their endpoint values there, and a settled intersection
// hops to its neighbours (straight crossings at the cheapest rate over the
// columns meeting the cut, vias at the point minimum) and seeds the incident
// segments with fresh anchored functions.
class SegmentLabels {
 public:
  SegmentLabels() = default;
  static SegmentLabels compute(const GeneralCosts& gc, const TargetSet& targets);

  int cols() const { return cols_; }
  int cuts() const { return cuts_; }
  int layers() const { return l_; }
  bool empty() const { return sets_.empty(); }

  const FunctionSet& at(int i, int m, int z) const { return sets_[idx(i, m, z)]; }
  // Exact distance at the crossing of the a-th vertical and m-th horizontal
  // cut (both 1-based) on layer z.
  Cost corner(int a, int m, int z) const { return corner_[cidx(a, m, z)]; }
  const LabelStats& stats() const { return stats_; }

 private:
  std::size_t idx(int i, int m, int z) const {
    return (static_cast<std::size_t>(m - 1) * cols_ + i) * l_ + (z - 1);
  }
  std::size_t cidx(int a, int m, int z) const {
    return (static_cast<std::size_t>(a - 1) * cuts_ + (m - 1)) * l_ + (z - 1);
  }

  int cols_ = 0, cuts_ = 0, l_ = 0;
  std::vector<FunctionSet> sets_;
  std::vector<Cost> corner_;
  LabelStats stats_;
};

// Balanced layer-interval tree: out-degree is the smallest d with
// d^eps_den >= n^eps_num (i.e. ceil(n^eps)), children split an interval into
// d nearly equal parts, larger parts first.  Depth is at most
// ceil(eps_den / eps_num).
struct LayerNode {
  int lo = 0, hi = 0;
  std::vector<int> kids;  // empty for single layers
};

struct LayerArborescence {
  int degree = 0;
  int depth = 0;  // max edges on a root-leaf path
  std::vector<LayerNode> nodes;  // nodes[0] is the root

  static LayerArborescence build(int z_lo, int z_hi, int eps_num, int eps_den);
};

// Point-to-target distance oracle for the tile cost model.  Preprocessing
// labels all boundary segments (both orientations), then prepares per tile
// and per via-connected layer interval: a vias-only table, one envelope per
// layer for same-layer boundary exits, and envelopes per interval-tree node
// for exits above/below the query layer with the via prefix folded in.
// A query takes the minimum over the structures of every containing tile;
// on cut lines the incident segment envelopes and the via stack anchored at
// the point are consulted as well.
class GeneralOracle {
 public:
  GeneralOracle(GeneralCosts gc, TargetSet targets, int eps_num = 1, int eps_den = 2);

  Cost query(Point3 v) const;

  const GeneralCosts& costs() const { return gc_; }
  const TargetSet& targets() const { return targets_; }
  const SegmentLabels& horizontal_labels() const { return hor_; }
  const SegmentLabels& vertical_labels() const { return vert_; }

  struct Interval {
    int za = 0, zb = 0;             // inclusive layer range
    std::vector<Cost> via_cum;      // via_cum[z - za]: via prefix from za
    LayerArborescence arb;
    std::vector<EnvelopeIndex> up;  // per node: exits in later siblings (+V baked)
    std::vector<EnvelopeIndex> dn;  // per node: exits in earlier siblings (-V baked)
    std::vector<EnvelopeIndex> eq;  // per layer of the interval: same-layer exits
  };
  const Interval& tile_interval(int i, int j, int z) const {
    const Tile& t = tiles_[static_cast<std::size_t>(i) * gc_.grid().rows() + j];
    return t.ivals[t.ival_of[z - 1]];
  }

 private:
  struct Tile {
    std::vector<Cost> viaonly;  // per layer: via stack to a target covering the tile
    std::vector<Interval> ivals;
    std::vector<int> ival_of;   // layer z-1 -> index into ivals
  };

  void build_tile(int i, int j);
  Cost interior_query(int i, int j, Point3 v) const;
  Cost boundary_query(Point3 v) const;
  Cost segments_at(Point3 v, int z) const;  // min over containing boundary segments

  GeneralCosts gc_;
  TargetSet targets_;
  SegmentLabels hor_, vert_;
  std::vector<Tile> tiles_;
  int eps_num_ = 1, eps_den_ = 2;
};

}  // namespace gridroute
