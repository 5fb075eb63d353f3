// Command-line front end: generate, validate, route and benchmark routing
// instances.  Exit codes: 0 on success, 1 on a validation or usage error,
// 2 when a net cannot be routed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gridroute/bench.hpp"
#include "gridroute/instance.hpp"
#include "gridroute/potential.hpp"
#include "gridroute/router.hpp"

namespace {

using namespace gridroute;

// "3/4" -> (3, 4); positive, at most one.
bool parse_fraction(const std::string& s, int& num, int& den) {
  const auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == s.size()) return false;
  try {
    std::size_t a = 0, b = 0;
    const int n = std::stoi(s.substr(0, slash), &a);
    const int d = std::stoi(s.substr(slash + 1), &b);
    if (a != slash || b != s.size() - slash - 1) return false;
    if (n <= 0 || d <= 0 || n > d) return false;
    num = n;
    den = d;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<Flavor> parse_flavor_list(const std::string& list) {
  std::vector<Flavor> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto f = flavor_from_name(item);
    if (!f) throw std::runtime_error("unknown flavor '" + item + "'");
    out.push_back(*f);
  }
  if (out.empty()) throw std::runtime_error("empty flavor list");
  return out;
}

std::string point_text(Point3 p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

// Verifies one potential against the definition: zero on the targets and
// within the edge cost across every edge of the subgraph, in both
// directions.  Returns the number of violated edges and describes the first.
struct SweepResult {
  std::int64_t edges = 0;
  std::int64_t bad = 0;
  std::string first;
};

SweepResult sweep_potential(const Instance& inst, const Subgraph& sg, const TargetSet& targets,
                            const PotentialProvider& pi, const std::vector<Coord>& xs,
                            const std::vector<Coord>& ys) {
  SweepResult res;
  auto check_edge = [&](Point3 u, Point3 w) {
    if (!sg.has_edge({u, w})) return;
    const Cost c = edge_cost(inst.costs, Edge{u, w});
    if (!is_finite(c)) return;
    const Cost pu = pi.at(u), pw = pi.at(w);
    ++res.edges;
    bool ok;
    if (is_finite(pu) && is_finite(pw))
      ok = c - pu + pw >= 0 && c - pw + pu >= 0;
    else
      ok = !is_finite(pu) && !is_finite(pw);  // a finite side could reach the
                                              // targets through this edge
    if (!ok && res.bad++ == 0) {
      std::ostringstream os;
      os << "edge " << point_text(u) << "-" << point_text(w) << ": cost " << c << ", potential "
         << (is_finite(pu) ? std::to_string(pu) : "inf") << " / "
         << (is_finite(pw) ? std::to_string(pw) : "inf");
      res.first = os.str();
    }
  };
  for (int z = 1; z <= inst.window.layers; ++z)
    for (const Coord y : ys)
      for (const Coord x : xs) {
        const Point3 u{x, y, z};
        check_edge(u, {x + 1, y, z});
        check_edge(u, {x, y + 1, z});
        if (z < inst.window.layers) check_edge(u, {x, y, z + 1});
      }
  // target vertices must sit at potential zero
  for (const Rect& r : targets.rects)
    for (Coord y = r.y_lo; y <= r.y_hi && res.bad == 0; ++y)
      for (Coord x = r.x_lo; x <= r.x_hi && res.bad == 0; ++x) {
        const Point3 u{x, y, r.z};
        if (!sg.has_vertex(u)) continue;
        if (pi.at(u) != 0) {
          ++res.bad;
          res.first = "target " + point_text(u) + ": potential " + std::to_string(pi.at(u));
        }
      }
  return res;
}

// Coordinates the sweep visits on one axis.  Small windows are swept fully;
// large ones at every grid cut (give or take one) plus a uniform stride, so
// each affine piece of the potential still gets probed.
std::vector<Coord> sweep_coords(Coord lo, Coord hi, const std::vector<Coord>& cuts,
                                std::int64_t limit) {
  std::vector<Coord> out;
  if (hi - lo + 1 <= limit) {
    for (Coord c = lo; c <= hi; ++c) out.push_back(c);
    return out;
  }
  std::set<Coord> keep = {lo, hi};
  for (const Coord c : cuts)
    for (Coord d = c - 1; d <= c + 1; ++d)
      if (d >= lo && d <= hi) keep.insert(d);
  const Coord stride = (hi - lo) / limit + 1;
  for (Coord c = lo; c <= hi; c += stride) keep.insert(c);
  out.assign(keep.begin(), keep.end());
  return out;
}

int cmd_gen(const GenConfig& cfg, const std::string& out) {
  const Instance inst = generate_instance(cfg);
  save_instance(inst, out);
  std::cout << "wrote " << out << ": window " << inst.window.width() << "x"
            << inst.window.height() << "x" << inst.window.layers << ", " << inst.nets.size()
            << " net(s)\n";
  return 0;
}

int cmd_check(const std::string& file) {
  const Instance inst = load_instance(file);
  const Subgraph sg = instance_subgraph(inst);
  const TileGrid& g = inst.costs.grid();
  std::cout << file << ": window " << inst.window.width() << "x" << inst.window.height() << "x"
            << inst.window.layers << ", grid " << g.cols() << "x" << g.rows() << " tiles, "
            << inst.nets.size() << " net(s), " << inst.blocked.size() << " blocked rect(s)\n";

  const std::vector<Coord> xs = sweep_coords(inst.window.x_lo, inst.window.x_hi, g.xs(), 256);
  const std::vector<Coord> ys = sweep_coords(inst.window.y_lo, inst.window.y_hi, g.ys(), 256);
  const bool sampled = static_cast<std::int64_t>(xs.size()) < inst.window.width() ||
                       static_cast<std::int64_t>(ys.size()) < inst.window.height();
  if (sampled) std::cout << "window too large for a full sweep; probing " << xs.size() << "x"
                         << ys.size() << " coordinates\n";

  bool all_ok = true;
  for (const NetSpec& net : inst.nets) {
    if (net.pins.size() < 2) {
      std::cout << "net " << net.name << ": single pin, nothing to check\n";
      continue;
    }
    TargetSet targets;
    targets.rects.assign(net.pins.begin() + 1, net.pins.end());
    bool net_ok = true;
    for (const Flavor f : {Flavor::kZero, Flavor::kL1, Flavor::kSimple, Flavor::kGeneral}) {
      const auto pi = make_potential(f, inst.costs, targets, inst.eps_num, inst.eps_den);
      const SweepResult res = sweep_potential(inst, sg, targets, *pi, xs, ys);
      if (res.bad > 0) {
        net_ok = false;
        std::cout << "net " << net.name << ": " << flavor_name(f) << " potential infeasible on "
                  << res.bad << " of " << res.edges << " edges; first: " << res.first << "\n";
      }
    }
    if (net_ok) std::cout << "net " << net.name << ": all potentials feasible\n";
    all_ok = all_ok && net_ok;
  }
  if (!all_ok) return 1;
  std::cout << "check passed\n";
  return 0;
}

int cmd_route(const std::string& file, const std::string& flavor, const std::string& epsilon,
              const std::string& delta) {
  Instance inst = load_instance(file);
  const auto f = flavor_from_name(flavor);
  if (!f) throw std::runtime_error("unknown flavor '" + flavor + "'");
  if (!epsilon.empty() && !parse_fraction(epsilon, inst.eps_num, inst.eps_den))
    throw std::runtime_error("bad epsilon '" + epsilon + "', expected a fraction like 1/2");
  int delta_num = inst.delta_num, delta_den = inst.delta_den;
  const bool incremental = !delta.empty();
  if (incremental && !parse_fraction(delta, delta_num, delta_den))
    throw std::runtime_error("bad delta '" + delta + "', expected a fraction like 3/4");

  const Subgraph base = instance_subgraph(inst);
  const PotentialConfig pc{*f, inst.eps_num, inst.eps_den};
  bool all_connected = true;
  Cost total = 0;
  for (std::size_t n = 0; n < inst.nets.size(); ++n) {
    const NetSpec& net = inst.nets[n];
    GeneralCosts gc = inst.costs;
    Subgraph sg = base;
    if (incremental) {
      gc = discounted_costs(inst.costs, net.reserved, delta_num, delta_den);
      std::vector<Rect> others;
      for (std::size_t m = 0; m < inst.nets.size(); ++m)
        if (m != n)
          others.insert(others.end(), inst.nets[m].reserved.begin(), inst.nets[m].reserved.end());
      block_rect_edges(sg, others);
    }
    const RouteResult res = route_net(gc, sg, net.pins, pc);
    if (!res.connected) {
      all_connected = false;
      std::cout << "net " << net.name << ": FAILED, not all pins reachable\n";
      continue;
    }
    total += res.cost;
    std::cout << "net " << net.name << ": cost " << res.cost << ", " << res.paths.size()
              << " path(s), labeled " << res.search.labeled << ", popped " << res.search.popped
              << "\n";
  }
  std::cout << (all_connected ? "routed all " : "failed; routed some of ") << inst.nets.size()
            << " net(s), total cost " << total << "\n";
  return all_connected ? 0 : 2;
}

int cmd_bench(const std::string& file, const std::string& flavors, const std::string& mode,
              bool no_timing, const std::string& out) {
  const Instance inst = load_instance(file);
  BenchConfig cfg;
  cfg.flavors = parse_flavor_list(flavors);
  if (mode == "incremental")
    cfg.incremental = true;
  else if (mode != "bulk")
    throw std::runtime_error("unknown mode '" + mode + "', expected bulk or incremental");
  cfg.timing = !no_timing;
  const std::string chip = std::filesystem::path(file).stem().string();
  const std::vector<BenchRow> rows = run_benchmark(inst, chip, cfg);
  if (out == "-") {
    write_csv(rows, std::cout);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write '" + out + "'");
    write_csv(rows, os);
    std::cout << "wrote " << out << ": " << rows.size() << " row(s)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goal-oriented routing on layered tile grids"};
  app.require_subcommand(1);

  GenConfig gen_cfg;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--seed", gen_cfg.seed, "random seed");
  gen->add_option("--p", gen_cfg.p, "interior x cuts")->check(CLI::Range(0, 64));
  gen->add_option("--q", gen_cfg.q, "interior y cuts")->check(CLI::Range(0, 64));
  gen->add_option("--l", gen_cfg.l, "layers")->check(CLI::Range(1, 32));
  gen->add_option("--t", gen_cfg.t, "pins per net")->check(CLI::Range(1, 32));
  gen->add_option("--nets", gen_cfg.nets, "number of nets")->check(CLI::Range(0, 512));
  gen->add_option("--block-density", gen_cfg.block_density, "chance a tile is infinite")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--cost-max", gen_cfg.cost_max, "largest finite tile cost")
      ->check(CLI::Range(Cost{1}, kMaxFiniteCost));
  gen->add_option("--reserve-keep", gen_cfg.reserve_keep, "chance a pre-routed run is reserved")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("-o,--out", gen_out, "output file")->required();

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "validate an instance and its potentials");
  check->add_option("file", check_file, "instance file")->required();

  std::string route_file, route_flavor = "general", route_eps, route_delta;
  CLI::App* route = app.add_subcommand("route", "route all nets of an instance");
  route->add_option("file", route_file, "instance file")->required();
  route->add_option("--flavor", route_flavor, "potential: zero, l1, simple or general");
  route->add_option("--epsilon", route_eps, "layer-tree exponent, a fraction like 1/2");
  route->add_option("--delta", route_delta,
                    "reservation discount like 3/4; enables incremental mode");

  std::string bench_file, bench_flavors = "zero,l1,simple,general", bench_mode = "bulk",
                          bench_out = "-";
  bool bench_no_timing = false;
  CLI::App* bench = app.add_subcommand("bench", "compare potentials net by net, CSV output");
  bench->add_option("file", bench_file, "instance file")->required();
  bench->add_option("--flavors", bench_flavors, "comma-separated flavor list");
  bench->add_option("--mode", bench_mode, "bulk or incremental");
  bench->add_flag("--no-timing", bench_no_timing, "zero the microsecond columns");
  bench->add_option("-o,--out", bench_out, "output CSV, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_cfg, gen_out);
    if (check->parsed()) return cmd_check(check_file);
    if (route->parsed()) return cmd_route(route_file, route_flavor, route_eps, route_delta);
    if (bench->parsed())
      return cmd_bench(bench_file, bench_flavors, bench_mode, bench_no_timing, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
