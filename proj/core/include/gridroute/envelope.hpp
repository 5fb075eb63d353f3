#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gridroute/cost.hpp"
#include "gridroute/exact.hpp"

namespace gridroute {

// ---- 1-D: dynamic lower envelope of affine functions -----------------------
//
// Keeps the functions that attain the pointwise minimum on more than one
// point of an integer interval [lo, hi].  Insertions report which existing
// functions got dominated and whether a surviving function's key (minimum of
// the function over its winning subinterval) increased, so a caller running a
// label-correcting sweep can keep its heap lazily consistent.

struct AffineFn1 {
  Cost slope = 0;
  Cost offset = 0;

  Cost at(Coord x) const {
    const i128 v = i128(slope) * x + offset;
    return static_cast<Cost>(v);
  }
  Rat at(const Rat& x) const { return Rat::make(i128(slope) * x.num + i128(offset) * x.den, x.den); }
  friend bool operator==(const AffineFn1&, const AffineFn1&) = default;
};

struct FnInsertOutcome {
  bool inserted = false;
  std::uint32_t id = UINT32_MAX;           // valid when inserted
  std::vector<std::uint32_t> removed;      // previously-kept functions now dominated
  std::optional<std::uint32_t> key_increased;
};

class FunctionSet {
 public:
  struct Entry {
    AffineFn1 fn;
    std::uint32_t id = 0;
  };

  FunctionSet() = default;
  FunctionSet(Coord lo, Coord hi);

  FnInsertOutcome insert(const AffineFn1& g);

  bool empty() const { return ents_.empty(); }
  int size() const { return static_cast<int>(ents_.size()); }
  Coord lo() const { return lo_; }
  Coord hi() const { return hi_; }
  bool degenerate() const { return lo_ == hi_; }
  const std::vector<Entry>& entries() const { return ents_; }

  // Envelope value at an integer point of the domain.
  Cost min_at(Coord x) const;
  // Position of the winning entry at an integer point of the domain.
  int index_at(Coord x) const;

  // Winning interval of the k-th entry (entries are ordered left to right).
  Rat win_lo(int k) const;
  Rat win_hi(int k) const;
  // min of entry k over its winning interval.
  Rat key(int k) const;
  // Same, addressed by id; nullopt when the id is no longer kept.
  std::optional<Rat> key_of(std::uint32_t id) const;

 private:
  FnInsertOutcome insert_degenerate(const AffineFn1& g);

  Coord lo_ = 0, hi_ = 0;
  std::vector<Entry> ents_;  // slope strictly decreasing == winning order
  std::uint32_t next_id_ = 0;
};

// ---- 2-D: static lower envelope with point location ------------------------

struct AffineFn2 {
  Cost ax = 0, ay = 0;
  Cost c = 0;

  Cost at(Coord x, Coord y) const {
    const i128 v = i128(ax) * x + i128(ay) * y + c;
    return static_cast<Cost>(v);
  }
  friend bool operator==(const AffineFn2&, const AffineFn2&) = default;
};

struct Box {
  Coord x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;

  bool valid() const {
    return x_lo <= x_hi && y_lo <= y_hi && x_lo >= kUniverseLo && x_hi <= kUniverseHi &&
           y_lo >= kUniverseLo && y_hi <= kUniverseHi;
  }
  bool contains(Coord x, Coord y) const { return x_lo <= x && x <= x_hi && y_lo <= y && y <= y_hi; }
};

// Rational point with a shared positive denominator.
struct RatPoint {
  i128 nx = 0, ny = 0, d = 1;
  Rat x() const { return Rat::make(nx, d); }
  Rat y() const { return Rat::make(ny, d); }
};

// Lower envelope of a fixed family of finite affine functions over a box,
// answering "which function is minimal at this point" by point location in a
// slab decomposition.  Arithmetic is exact throughout; ties are broken toward
// the earliest function, and functions that never win a full-dimensional
// piece of the box are dropped.
class EnvelopeIndex {
 public:
  EnvelopeIndex() = default;

  // Throws std::invalid_argument on an invalid box or an empty family.
  static EnvelopeIndex build(const Box& box, std::vector<AffineFn2> fns);

  bool built() const { return built_; }
  const Box& box() const { return box_; }
  const std::vector<AffineFn2>& fns() const { return fns_; }

  Cost value_at(Coord x, Coord y) const;
  int winner_at(Coord x, Coord y) const;  // index into fns()

  // Number of functions that win a positive-measure piece of the box.
  int cell_count() const;

  // Test hooks: exact queries at rational points of the decomposition.
  std::vector<RatPoint> cell_vertices() const;
  int winner_at_point(const RatPoint& p) const;
  // sign of fns()[fi] - fns()[fj] at p
  int cmp_at_point(int fi, int fj, const RatPoint& p) const;

 private:
  enum class Mode { kEmpty, kPoint, kLineX, kLineY, kFull };

  void build_full(const std::vector<int>& order);
  bool insert_full(int fi, const std::vector<int>& alive);
  std::vector<int> rebuild_slab(std::vector<int> cands, const Rat& s) const;
  void compact();
  int slab_of(const Rat& x) const;
  int locate_in_list(const std::vector<int>& list, i128 ynum, i128 yden, const Rat& sx) const;

  bool built_ = false;
  Mode mode_ = Mode::kEmpty;
  Box box_;
  std::vector<AffineFn2> fns_;

  // kPoint
  int point_winner_ = -1;
  // kLineX (y fixed) / kLineY (x fixed): envelope along the free axis; the
  // k-th surviving entry corresponds to fn index line_ids_[k].
  FunctionSet line_env_;
  std::vector<int> line_ids_;
  // kFull
  std::vector<Rat> breaks_;             // slab left edges; breaks_[0] == x_lo
  std::vector<std::vector<int>> lists_;  // winners bottom-to-top per slab
};

}  // namespace gridroute
