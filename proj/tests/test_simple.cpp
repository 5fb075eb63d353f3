#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "gridroute/oracle.hpp"
#include "gridroute/simple_potential.hpp"

using namespace gridroute;

namespace {

// Two layers: layer 1 cheap horizontally, layer 2 cheap vertically.
const SimpleCosts kHv{{2, 8}, {20, 3}, {5}};

SimpleCosts random_costs(std::mt19937_64& rng, int max_layers) {
  std::uniform_int_distribution<int> layers(1, max_layers);
  std::uniform_int_distribution<Cost> cost(1, 30);
  const int l = layers(rng);
  SimpleCosts sc;
  for (int z = 0; z < l; ++z) {
    sc.horiz.push_back(cost(rng));
    sc.vert.push_back(cost(rng));
    if (z + 1 < l) sc.via.push_back(cost(rng));
  }
  return sc;
}

TargetSet random_targets(std::mt19937_64& rng, int layers, int max_rects) {
  std::uniform_int_distribution<Coord> c(-15, 15);
  std::uniform_int_distribution<int> z(1, layers);
  std::uniform_int_distribution<int> n(1, max_rects);
  TargetSet ts;
  const int k = n(rng);
  for (int r = 0; r < k; ++r) {
    Coord x1 = c(rng), x2 = c(rng), y1 = c(rng), y2 = c(rng);
    if (x1 > x2) std::swap(x1, x2);
    if (y1 > y2) std::swap(y1, y2);
    ts.rects.push_back({x1, x2, y1, y2, z(rng)});
  }
  return ts;
}

}  // namespace

TEST_CASE("via prefix differences") {
  const SimpleCosts sc{{1, 1, 1, 1}, {1, 1, 1, 1}, {5, 7, 11}};
  const ViaPrefix vp(sc);
  CHECK(vp.layers() == 4);
  for (int z = 1; z <= 4; ++z) CHECK(vp.between(z, z) == 0);
  CHECK(vp.between(1, 2) == 5);
  CHECK(vp.between(2, 1) == 5);
  CHECK(vp.between(1, 4) == 23);
  CHECK(vp.between(2, 4) == 18);
}

TEST_CASE("known two-layer distances") {
  const ViaPrefix vp(kHv);
  const Point3 t{4, 3, 1};

  // Horizontal run on layer 1, vertical run on layer 2, two vias.
  CHECK(simple_distance_quadratic(kHv, vp, {0, 0, 1}, t) == 27);
  CHECK(simple_distance_linear(kHv, vp, {0, 0, 1}, t) == 27);
  // Starting on layer 2 saves one via.
  CHECK(simple_distance_quadratic(kHv, vp, {0, 0, 2}, t) == 22);
  CHECK(simple_distance_linear(kHv, vp, {0, 0, 2}, t) == 22);
  // Degenerate cases.
  CHECK(simple_distance_linear(kHv, vp, t, t) == 0);
  CHECK(simple_distance_linear(kHv, vp, {4, 3, 2}, t) == 5);
  CHECK(simple_distance_linear(kHv, vp, {9, 3, 1}, t) == 10);

  // The coordinatewise bound uses the cheapest layer per direction.
  const TargetSet ts{{{4, 4, 3, 3, 1}}};
  CHECK(l1_potential(kHv, vp, {0, 0, 1}, ts) == 17);
  CHECK(l1_potential(kHv, vp, {0, 0, 2}, ts) == 22);
  CHECK(l1_potential(kHv, vp, {4, 3, 1}, ts) == 0);
}

TEST_CASE("rectangle distance clamps the free coordinates") {
  const ViaPrefix vp(kHv);
  const Rect r{2, 6, -1, 3, 2};
  std::mt19937_64 rng(4511);
  std::uniform_int_distribution<Coord> c(-10, 10);
  std::uniform_int_distribution<int> z(1, 2);
  for (int k = 0; k < 200; ++k) {
    const Point3 v{c(rng), c(rng), z(rng)};
    Cost best = kInfCost;
    for (Coord x = r.x_lo; x <= r.x_hi; ++x)
      for (Coord y = r.y_lo; y <= r.y_hi; ++y)
        best = std::min(best, simple_distance_linear(kHv, vp, v, {x, y, r.z}));
    CHECK(simple_rect_distance(kHv, vp, v, r) == best);
  }
}

TEST_CASE("the two exact forms agree on random instances") {
  std::mt19937_64 rng(90210);
  std::uniform_int_distribution<Coord> c(-40, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleCosts sc = random_costs(rng, 8);
    const ViaPrefix vp(sc);
    std::uniform_int_distribution<int> z(1, sc.layers());
    for (int k = 0; k < 40; ++k) {
      const Point3 a{c(rng), c(rng), z(rng)};
      const Point3 b{c(rng), c(rng), z(rng)};
      const Cost q = simple_distance_quadratic(sc, vp, a, b);
      CHECK(q == simple_distance_linear(sc, vp, a, b));
      CHECK(q == simple_distance_linear(sc, vp, b, a));  // symmetric
    }
  }
}

TEST_CASE("the point-location oracle equals the direct scan everywhere") {
  std::mt19937_64 rng(360360);
  for (int trial = 0; trial < 60; ++trial) {
    const SimpleCosts sc = random_costs(rng, 6);
    const ViaPrefix vp(sc);
    const TargetSet ts = random_targets(rng, sc.layers(), 4);
    const SimpleOracle so(sc, ts);
    const Window w = padded_window(GeneralCosts::from_simple(sc), ts);
    for (std::int64_t k = 0; k < w.vertex_count(); ++k) {
      const Point3 v = w.point(k);
      const Cost want = simple_target_distance(sc, vp, v, ts);
      CHECK(so.query(v) == want);
      CHECK(l1_potential(sc, vp, v, ts) <= want);
      if (ts.contains(v)) CHECK(want == 0);
    }
  }
}

TEST_CASE("the closed forms match the graph oracle on the padded window") {
  std::mt19937_64 rng(151515);
  for (int trial = 0; trial < 25; ++trial) {
    const SimpleCosts sc = random_costs(rng, 4);
    const ViaPrefix vp(sc);
    const TargetSet ts = random_targets(rng, sc.layers(), 3);
    const GeneralCosts gc = GeneralCosts::from_simple(sc);
    const Window w = padded_window(gc, ts);
    const auto dist = oracle_distances(gc, ts, w);
    const SimpleOracle so(sc, ts);
    for (std::int64_t k = 0; k < w.vertex_count(); ++k) {
      const Point3 v = w.point(k);
      CHECK(dist[static_cast<std::size_t>(k)] == simple_target_distance(sc, vp, v, ts));
      CHECK(dist[static_cast<std::size_t>(k)] == so.query(v));
    }
  }
}
