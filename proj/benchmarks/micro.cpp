// Micro-benchmarks for the hot paths: oracle queries, the boundary-segment
// labeling sweep, and end-to-end routing under each potential flavor.
#include <benchmark/benchmark.h>

#include <vector>

#include "gridroute/general_potential.hpp"
#include "gridroute/instance.hpp"
#include "gridroute/potential.hpp"
#include "gridroute/router.hpp"
#include "gridroute/simple_potential.hpp"

using namespace gridroute;

namespace {

const Instance& bench_instance() {
  static const Instance inst = [] {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.p = 6;
    cfg.q = 6;
    cfg.l = 4;
    cfg.t = 3;
    cfg.nets = 1;
    cfg.block_density = 0.2;
    cfg.cost_max = 20;
    return generate_instance(cfg);
  }();
  return inst;
}

TargetSet bench_targets() {
  const NetSpec& net = bench_instance().nets.at(0);
  return TargetSet{std::vector<Rect>(net.pins.begin() + 1, net.pins.end())};
}

std::vector<Point3> window_points() {
  const Window& w = bench_instance().window;
  std::vector<Point3> pts;
  const std::int64_t n = w.index({w.x_hi, w.y_hi, w.layers}) + 1;
  pts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t idx = 0; idx < n; ++idx) pts.push_back(w.point(idx));
  return pts;
}

void BM_SimpleQuery(benchmark::State& state) {
  const Instance& inst = bench_instance();
  TargetSet ts = bench_targets();
  SimpleOracle oracle(to_simple_min(inst.costs), ts);
  const std::vector<Point3> pts = window_points();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.query(pts[i]));
    if (++i == pts.size()) i = 0;
  }
}
BENCHMARK(BM_SimpleQuery);

void BM_GeneralQuery(benchmark::State& state) {
  const Instance& inst = bench_instance();
  TargetSet ts = bench_targets();
  GeneralOracle oracle(refine_grid(inst.costs, ts), ts, inst.eps_num, inst.eps_den);
  const std::vector<Point3> pts = window_points();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.query(pts[i]));
    if (++i == pts.size()) i = 0;
  }
}
BENCHMARK(BM_GeneralQuery);

void BM_LabelSegments(benchmark::State& state) {
  TargetSet ts = bench_targets();
  GeneralCosts rgc = refine_grid(bench_instance().costs, ts);
  for (auto _ : state) {
    SegmentLabels labels = SegmentLabels::compute(rgc, ts);
    benchmark::DoNotOptimize(labels);
  }
  state.counters["pops"] =
      static_cast<double>(SegmentLabels::compute(rgc, ts).stats().pops);
}
BENCHMARK(BM_LabelSegments);

void BM_DijkstraFlavors(benchmark::State& state) {
  const Instance& inst = bench_instance();
  const Flavor flavor = static_cast<Flavor>(state.range(0));
  Subgraph sg = instance_subgraph(inst);
  const NetSpec& net = inst.nets.at(0);
  std::int64_t popped = 0;
  for (auto _ : state) {
    RouteResult rr = route_net(inst.costs, sg, net.pins, {flavor, inst.eps_num, inst.eps_den});
    popped = rr.search.popped;
    benchmark::DoNotOptimize(rr);
  }
  state.SetLabel(flavor_name(flavor));
  state.counters["popped"] = static_cast<double>(popped);
}
BENCHMARK(BM_DijkstraFlavors)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
