#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "gridroute/envelope.hpp"

using namespace gridroute;

namespace {

Cost naive_min1(const std::vector<AffineFn1>& fns, Coord x) {
  Cost best = kInfCost;
  for (const AffineFn1& f : fns) best = std::min(best, f.at(x));
  return best;
}

Cost naive_min2(const std::vector<AffineFn2>& fns, Coord x, Coord y) {
  Cost best = kInfCost;
  for (const AffineFn2& f : fns) best = std::min(best, f.at(x, y));
  return best;
}

bool is_int(const Rat& r, std::int64_t v) { return rat_cmp(r, v) == 0; }

}  // namespace

TEST_CASE("five-chain envelope with a dominating late insertion") {
  // Domain [0,12]; five functions whose winning intervals tile it, then a
  // sixth that knocks out the two middle ones, raises exactly one surviving
  // key and trims a neighbour's winning interval.
  FunctionSet fs(0, 12);
  const std::vector<AffineFn1> fns = {
      {4, 36}, {-2, 54}, {-4, 66}, {-6, 82}, {-8, 102}};
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const FnInsertOutcome r = fs.insert(fns[k]);
    CHECK(r.inserted);
    CHECK(r.id == k);
    CHECK(r.removed.empty());
    if (k < 2) {
      // f0 bottoms out at the left end, which no later insert touches.
      CHECK_FALSE(r.key_increased.has_value());
    } else {
      // Each steeper tail trims its left neighbour away from the
      // neighbour's cheap end, raising that one key.
      REQUIRE(r.key_increased.has_value());
      CHECK(*r.key_increased == k - 1);
    }
  }
  REQUIRE(fs.size() == 5);
  const std::int64_t wins[6] = {0, 3, 6, 8, 10, 12};
  const std::int64_t keys[5] = {36, 42, 34, 22, 6};
  for (int k = 0; k < 5; ++k) {
    CHECK(fs.entries()[k].fn == fns[static_cast<std::size_t>(k)]);
    CHECK(is_int(fs.win_lo(k), wins[k]));
    CHECK(is_int(fs.win_hi(k), wins[k + 1]));
    CHECK(is_int(fs.key(k), keys[k]));
  }

  const FnInsertOutcome r = fs.insert({-5, 69});
  CHECK(r.inserted);
  CHECK(r.id == 5);
  CHECK(r.removed == std::vector<std::uint32_t>{2, 3});
  REQUIRE(r.key_increased.has_value());
  CHECK(*r.key_increased == 1);
  CHECK(rat_eq(*fs.key_of(1), Rat::of(44)));  // was 42

  REQUIRE(fs.size() == 4);
  CHECK(fs.entries()[2].id == 5);
  CHECK(is_int(fs.win_lo(2), 5));
  CHECK(is_int(fs.win_hi(2), 11));
  CHECK(is_int(fs.win_lo(3), 11));  // the steep function's interval shrank
  CHECK_FALSE(fs.key_of(2).has_value());
  CHECK_FALSE(fs.key_of(3).has_value());

  // A parallel function above the newcomer changes nothing.
  const FnInsertOutcome dud = fs.insert({-5, 90});
  CHECK_FALSE(dud.inserted);
  CHECK(dud.removed.empty());
  CHECK(fs.size() == 4);

  std::vector<AffineFn1> all = fns;
  all.push_back({-5, 69});
  all.push_back({-5, 90});
  for (Coord x = 0; x <= 12; ++x) {
    CHECK(fs.min_at(x) == naive_min1(all, x));
    const int k = fs.index_at(x);
    CHECK(fs.entries()[k].fn.at(x) == fs.min_at(x));
  }
}

TEST_CASE("duplicate and dominated insertions are rejected") {
  FunctionSet fs(-5, 5);
  CHECK(fs.insert({1, 0}).inserted);
  CHECK_FALSE(fs.insert({1, 0}).inserted);   // exact duplicate
  CHECK_FALSE(fs.insert({1, 3}).inserted);   // parallel, higher
  const FnInsertOutcome lower = fs.insert({1, -2});
  CHECK(lower.inserted);                     // parallel, lower: replaces
  CHECK(lower.removed == std::vector<std::uint32_t>{0});
  CHECK(fs.size() == 1);
  CHECK(fs.min_at(0) == -2);
}

TEST_CASE("degenerate domains keep a single best value") {
  FunctionSet fs(7, 7);
  CHECK(fs.degenerate());
  CHECK(fs.insert({3, 0}).inserted);   // value 21
  CHECK_FALSE(fs.insert({0, 21}).inserted);  // equal value loses
  const FnInsertOutcome r = fs.insert({-1, 20});  // value 13
  CHECK(r.inserted);
  CHECK(r.removed == std::vector<std::uint32_t>{0});
  CHECK(fs.size() == 1);
  CHECK(fs.min_at(7) == 13);
}

TEST_CASE("out-of-range functions and domains are rejected") {
  CHECK_THROWS_AS(FunctionSet(3, 2), std::invalid_argument);
  FunctionSet fs(0, 10);
  CHECK_THROWS_AS(fs.insert({kMaxFiniteCost + 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(fs.insert({0, (Cost{1} << 62) + 1}), std::invalid_argument);
}

TEST_CASE("random envelopes match the naive minimum") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<Coord> dom(-20, 20);
  std::uniform_int_distribution<Cost> slope(-50, 50);
  std::uniform_int_distribution<Cost> offset(-400, 400);
  std::uniform_int_distribution<int> count(1, 12);

  for (int trial = 0; trial < 2000; ++trial) {
    Coord lo = dom(rng), hi = dom(rng);
    if (lo > hi) std::swap(lo, hi);
    FunctionSet fs(lo, hi);
    std::vector<AffineFn1> all;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      const AffineFn1 f{slope(rng), offset(rng)};
      all.push_back(f);
      fs.insert(f);

      // Envelope value, winner consistency and the interval chain hold
      // after every insertion, not just at the end.
      REQUIRE(!fs.entries().empty());
      CHECK(is_int(fs.win_lo(0), lo));
      CHECK(is_int(fs.win_hi(fs.size() - 1), hi));
      for (int e = 0; e + 1 < fs.size(); ++e) {
        CHECK(rat_eq(fs.win_hi(e), fs.win_lo(e + 1)));
        CHECK(fs.entries()[e].fn.slope > fs.entries()[e + 1].fn.slope);
      }
      for (Coord x = lo; x <= hi; ++x) {
        CHECK(fs.min_at(x) == naive_min1(all, x));
        CHECK(fs.entries()[fs.index_at(x)].fn.at(x) == fs.min_at(x));
      }
    }
  }
}

TEST_CASE("three-function plane envelope locates its cells") {
  const std::vector<AffineFn2> fns = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const EnvelopeIndex e = EnvelopeIndex::build(Box{0, 2, 0, 2}, fns);
  REQUIRE(e.built());
  CHECK(e.cell_count() == 3);

  CHECK(e.value_at(0, 0) == 0);
  // (0,0) ties between the two linear functions; the located cell's winner
  // must attain the minimum, whichever side the corner falls on.
  const int w00 = e.winner_at(0, 0);
  CHECK((w00 == 0 || w00 == 1));
  CHECK(e.winner_at(1, 0) == 1);
  CHECK(e.winner_at(0, 1) == 0);
  CHECK(e.winner_at(2, 2) == 2);
  CHECK(e.value_at(2, 2) == 1);

  CHECK(e.winner_at_point({5, 3, 10}) == 1);   // (0.5, 0.3): y is lowest
  CHECK(e.winner_at_point({3, 5, 10}) == 0);
  CHECK(e.winner_at_point({15, 17, 10}) == 2); // (1.5, 1.7): the constant

  const auto verts = e.cell_vertices();
  CHECK(!verts.empty());
  for (const RatPoint& p : verts) {
    const int w = e.winner_at_point(p);
    for (int j = 0; j < 3; ++j) CHECK(e.cmp_at_point(w, j, p) <= 0);
  }
}

TEST_CASE("plane envelope on degenerate boxes") {
  const std::vector<AffineFn2> fns = {{2, 1, 5}, {-1, 0, 9}, {0, -3, 11}};

  const EnvelopeIndex pt = EnvelopeIndex::build(Box{3, 3, 4, 4}, fns);
  CHECK(pt.value_at(3, 4) == naive_min2(fns, 3, 4));
  CHECK(pt.cell_count() == 1);

  const EnvelopeIndex lx = EnvelopeIndex::build(Box{-4, 6, 2, 2}, fns);
  for (Coord x = -4; x <= 6; ++x) CHECK(lx.value_at(x, 2) == naive_min2(fns, x, 2));

  const EnvelopeIndex ly = EnvelopeIndex::build(Box{1, 1, -5, 5}, fns);
  for (Coord y = -5; y <= 5; ++y) CHECK(ly.value_at(1, y) == naive_min2(fns, 1, y));
}

TEST_CASE("plane envelope rejects bad input") {
  CHECK_THROWS_AS(EnvelopeIndex::build(Box{0, 2, 0, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(EnvelopeIndex::build(Box{2, 0, 0, 2}, {{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(EnvelopeIndex::build(Box{0, 2, 0, 2}, {{kMaxFiniteCost + 1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("plane envelope spans the coordinate universe") {
  const std::vector<AffineFn2> fns = {{1, 1, 0}, {-1, 1, 10}, {1, -1, 20}, {0, 0, 1000}};
  const Box box{kUniverseLo, kUniverseHi, kUniverseLo, kUniverseHi};
  const EnvelopeIndex e = EnvelopeIndex::build(box, fns);
  for (const Coord x : {kUniverseLo, Coord{0}, kUniverseHi})
    for (const Coord y : {kUniverseLo, Coord{-7}, kUniverseHi})
      CHECK(e.value_at(x, y) == naive_min2(fns, x, y));
}

TEST_CASE("random plane envelopes match the naive minimum") {
  std::mt19937_64 rng(77002);
  std::uniform_int_distribution<Coord> dom(-6, 6);
  std::uniform_int_distribution<Cost> coef(-40, 40);
  std::uniform_int_distribution<int> count(1, 8);

  for (int trial = 0; trial < 500; ++trial) {
    Coord xl = dom(rng), xh = dom(rng), yl = dom(rng), yh = dom(rng);
    if (xl > xh) std::swap(xl, xh);
    if (yl > yh) std::swap(yl, yh);
    std::vector<AffineFn2> fns;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) fns.push_back({coef(rng), coef(rng), 10 * coef(rng)});

    const EnvelopeIndex e = EnvelopeIndex::build(Box{xl, xh, yl, yh}, fns);
    for (Coord x = xl; x <= xh; ++x)
      for (Coord y = yl; y <= yh; ++y) {
        CHECK(e.value_at(x, y) == naive_min2(fns, x, y));
        CHECK(fns[static_cast<std::size_t>(e.winner_at(x, y))].at(x, y) == e.value_at(x, y));
      }
  }
}
