// Tile-family potential: agreement with the segment-labeling oracle on
// area-restricted cost models, and rejection of every other cost shape.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "gridroute/oracle.hpp"
#include "gridroute/potential.hpp"
#include "gridroute/tile_potential.hpp"

using namespace gridroute;

namespace {

// Uniform per-layer costs restricted to a random routing area: inside tiles
// get the layer's (h, v) pair, outside tiles are infinite, and a via is
// usable exactly where both of its tiles are inside.
struct AreaChip {
  GeneralCosts gc;
  std::vector<char> inside;  // tile (i, j, z), same index order as the costs
};

AreaChip random_area_chip(std::mt19937_64& rng) {
  auto draw_cuts = [&](int n) {
    std::set<Coord> s;
    while (static_cast<int>(s.size()) < n)
      s.insert(static_cast<Coord>(rng() % 17) - 8);
    return std::vector<Coord>(s.begin(), s.end());
  };
  const int p = 1 + static_cast<int>(rng() % 4);
  const int q = 1 + static_cast<int>(rng() % 4);
  const int l = 1 + static_cast<int>(rng() % 3);
  TileGrid g(draw_cuts(p), draw_cuts(q), l);
  GeneralCosts gc(g, kInfCost);

  std::vector<Cost> hz(l + 1), vz(l + 1), wz(l + 1);
  for (int z = 1; z <= l; ++z) {
    hz[z] = 1 + static_cast<Cost>(rng() % 9);
    vz[z] = 1 + static_cast<Cost>(rng() % 9);
    wz[z] = 1 + static_cast<Cost>(rng() % 9);
  }

  AreaChip chip;
  chip.inside.assign(static_cast<std::size_t>(g.cols()) * g.rows() * l, 0);
  auto at = [&](int i, int j, int z) -> char& {
    return chip.inside[(static_cast<std::size_t>(i) * g.rows() + j) * l + (z - 1)];
  };
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j)
      for (int z = 1; z <= l; ++z)
        if (rng() % 10 < 7) {
          at(i, j, z) = 1;
          gc.h(i, j, z) = hz[z];
          gc.v(i, j, z) = vz[z];
        }
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j)
      for (int z = 1; z < l; ++z)
        if (at(i, j, z) && at(i, j, z + 1)) gc.via(i, j, z) = wz[z];
  chip.gc = std::move(gc);
  return chip;
}

TargetSet random_targets(std::mt19937_64& rng, int layers) {
  TargetSet ts;
  const int n = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < n; ++k) {
    Coord x = static_cast<Coord>(rng() % 17) - 8;
    Coord y = static_cast<Coord>(rng() % 17) - 8;
    Coord dx = static_cast<Coord>(rng() % 3);
    Coord dy = static_cast<Coord>(rng() % 3);
    int z = 1 + static_cast<int>(rng() % layers);
    ts.rects.push_back({x, x + dx, y, y + dy, z});
  }
  return ts;
}

}  // namespace

TEST_CASE("tile family equals the segment-labeling potential on area chips") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 60; ++trial) {
    AreaChip chip = random_area_chip(rng);
    TargetSet ts = random_targets(rng, chip.gc.grid().layers());

    auto tile = make_tile_potential(chip.gc, ts);
    auto seg = make_potential(Flavor::kGeneral, chip.gc, ts);
    CHECK(tile->flavor() == Flavor::kGeneral);

    Window w = padded_window(chip.gc, ts);
    std::vector<Cost> ref;
    if (trial % 6 == 0) ref = oracle_distances(chip.gc, ts, w);

    const std::int64_t n = w.index({w.x_hi, w.y_hi, w.layers}) + 1;
    for (std::int64_t idx = 0; idx < n; ++idx) {
      Point3 v = w.point(idx);
      Cost a = tile->at(v);
      CAPTURE(trial);
      CAPTURE(v.x);
      CAPTURE(v.y);
      CAPTURE(v.z);
      REQUIRE(a == seg->at(v));
      if (!ref.empty()) REQUIRE(a == ref[idx]);
    }
  }
}

TEST_CASE("two-layer area chip answers a few hand checks") {
  // Area is the single tile [0,10] x [0,6] on both layers; layer 1 runs at
  // (2, 3), layer 2 at (1, 5), vias cost 4.  Target: the point (10, 3) up top.
  TileGrid g({0, 10}, {0, 6}, 2);
  GeneralCosts gc(g, kInfCost);
  gc.h(1, 1, 1) = 2;
  gc.v(1, 1, 1) = 3;
  gc.h(1, 1, 2) = 1;
  gc.v(1, 1, 2) = 5;
  gc.via(1, 1, 1) = 4;
  TargetSet ts{{{10, 10, 3, 3, 2}}};

  auto tile = make_tile_potential(gc, ts);
  CHECK(tile->at({10, 3, 2}) == 0);
  CHECK(tile->at({0, 3, 2}) == 10);         // straight run on the fast layer
  CHECK(tile->at({10, 3, 1}) == 4);         // one via below the target
  CHECK(tile->at({0, 0, 1}) == 23);         // 3*3 up cheaply, via, 10 across the fast layer
  CHECK(tile->at({-4, 3, 2}) == kInfCost);  // outside the area

  // The full window agrees with the reference search.
  Window w = padded_window(gc, ts);
  std::vector<Cost> ref = oracle_distances(gc, ts, w);
  const std::int64_t n = w.index({w.x_hi, w.y_hi, w.layers}) + 1;
  for (std::int64_t idx = 0; idx < n; ++idx) REQUIRE(tile->at(w.point(idx)) == ref[idx]);
}

TEST_CASE("non-area cost shapes are rejected with a reason") {
  TargetSet origin{{{0, 0, 0, 0, 1}}};

  SUBCASE("mixed finite and infinite plane costs in one tile") {
    GeneralCosts gc(TileGrid({}, {}, 1), kInfCost);
    gc.h(0, 0, 1) = 1;  // v stays infinite
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, origin),
                         "tile potential: tile with mixed finite/infinite plane costs",
                         std::invalid_argument);
  }

  SUBCASE("two finite prices on the same layer") {
    GeneralCosts gc(TileGrid({0}, {}, 1), kInfCost);
    gc.h(0, 0, 1) = 1;
    gc.v(0, 0, 1) = 1;
    gc.h(1, 0, 1) = 2;
    gc.v(1, 0, 1) = 1;
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, origin),
                         "tile potential: finite plane costs differ within a layer",
                         std::invalid_argument);
  }

  SUBCASE("two finite via prices in the same layer pair") {
    GeneralCosts gc(TileGrid({0}, {}, 2), 1);
    gc.via(0, 0, 1) = 1;
    gc.via(1, 0, 1) = 2;
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, origin),
                         "tile potential: finite via costs differ within a layer pair",
                         std::invalid_argument);
  }

  SUBCASE("a finite via touching an infinite tile") {
    GeneralCosts gc(TileGrid({}, {}, 2), kInfCost);
    gc.h(0, 0, 2) = 1;
    gc.v(0, 0, 2) = 1;
    gc.via(0, 0, 1) = 1;  // lower endpoint is outside the area
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, TargetSet{{{0, 0, 0, 0, 2}}}),
                         "tile potential: finite via on a tile outside the area",
                         std::invalid_argument);
  }

  SUBCASE("input validation comes first") {
    GeneralCosts gc(TileGrid({}, {}, 1), 1);
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, TargetSet{}),
                         "tile potential: empty target set", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_tile_potential(gc, TargetSet{{{0, 0, 0, 0, 7}}}),
                         "tile potential: target rectangle out of range", std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_tile_potential(GeneralCosts{}, origin),
                         "tile potential: invalid costs", std::invalid_argument);
  }
}

TEST_CASE("per-tile pricing differences are not an area shape") {
  // A boundary edge between two differently priced finite tiles costs the
  // cheaper side; tile-wide affine families cannot express that, so the
  // factory refuses rather than approximate.
  GeneralCosts gc(TileGrid({0}, {0}, 1), 1);
  gc.h(1, 1, 1) = 5;
  gc.v(1, 1, 1) = 1;
  CHECK_THROWS_AS(make_tile_potential(gc, TargetSet{{{0, 0, 0, 0, 1}}}), std::invalid_argument);
}
