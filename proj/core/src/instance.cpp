#include "gridroute/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "json.hpp"

#include "gridroute/oracle.hpp"
#include "gridroute/router.hpp"

namespace gridroute {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

std::string rect_text(const Rect& r) {
  std::ostringstream os;
  os << "[" << r.x_lo << "," << r.x_hi << "]x[" << r.y_lo << "," << r.y_hi << "] layer " << r.z;
  return os.str();
}

const json& member(const json& j, const std::string& ctx, const char* key) {
  if (!j.is_object()) fail(ctx, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ctx, std::string("missing \"") + key + "\"");
  return *it;
}

void reject_unknown(const json& j, const std::string& ctx,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) known = true;
    if (!known) fail(ctx, "unknown field \"" + item.key() + "\"");
  }
}

std::int64_t get_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) fail(ctx, "expected an integer");
  return j.get<std::int64_t>();
}

Coord get_coord(const json& j, const std::string& ctx) {
  const std::int64_t v = get_int(j, ctx);
  if (v < -kCoordLimit || v > kCoordLimit) fail(ctx, "coordinate out of range");
  return v;
}

Cost get_cost(const json& j, const std::string& ctx) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfCost;
    fail(ctx, "expected a cost (positive integer or \"inf\")");
  }
  const std::int64_t v = get_int(j, ctx);
  if (v < 1 || v > kMaxFiniteCost) fail(ctx, "cost out of range [1, 2^29]");
  return v;
}

std::pair<int, int> get_fraction(const json& j, const std::string& ctx, int max_den) {
  if (!j.is_string()) fail(ctx, "expected a fraction string like \"3/4\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  long num = 0, den = 0;
  try {
    std::size_t na = 0, nb = 0;
    if (slash == std::string::npos) throw std::invalid_argument("");
    num = std::stol(s.substr(0, slash), &na);
    den = std::stol(s.substr(slash + 1), &nb);
    if (na != slash || nb != s.size() - slash - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(ctx, "expected a fraction string like \"3/4\"");
  }
  if (num < 1 || den < num) fail(ctx, "fraction must satisfy 1 <= numerator <= denominator");
  if (den > max_den) fail(ctx, "denominator too large (max " + std::to_string(max_den) + ")");
  return {static_cast<int>(num), static_cast<int>(den)};
}

std::pair<Coord, Coord> get_span(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.size() != 2) fail(ctx, "expected [lo, hi]");
  return {get_coord(j[0], ctx + "[0]"), get_coord(j[1], ctx + "[1]")};
}

Rect get_rect(const json& j, const std::string& ctx, int layers) {
  reject_unknown(j, ctx, {"x", "y", "z"});
  Rect r;
  std::tie(r.x_lo, r.x_hi) = get_span(member(j, ctx, "x"), ctx + ".x");
  std::tie(r.y_lo, r.y_hi) = get_span(member(j, ctx, "y"), ctx + ".y");
  const std::int64_t z = get_int(member(j, ctx, "z"), ctx + ".z");
  if (z < 1 || z > layers) fail(ctx, "layer " + std::to_string(z) + " outside 1.." +
                                         std::to_string(layers));
  r.z = static_cast<int>(z);
  if (!r.valid()) fail(ctx, "rect " + rect_text(r) + " has lo > hi");
  return r;
}

void check_in_window(const Rect& r, const Window& w, const std::string& ctx) {
  if (r.x_lo < w.x_lo || r.x_hi > w.x_hi || r.y_lo < w.y_lo || r.y_hi > w.y_hi)
    fail(ctx, "rect " + rect_text(r) + " outside the declared window");
}

// Every edge with both endpoints inside a net's reservation rectangles; used
// to check that reservations of distinct nets are edge-disjoint.
std::unordered_set<Edge, EdgeHash> reservation_edges(const std::vector<Rect>& rects, int layers) {
  std::unordered_set<Edge, EdgeHash> out;
  auto covered = [&](Point3 p) {
    for (const Rect& r : rects)
      if (r.contains(p)) return true;
    return false;
  };
  for (const Rect& r : rects)
    for (Coord y = r.y_lo; y <= r.y_hi; ++y)
      for (Coord x = r.x_lo; x <= r.x_hi; ++x) {
        const Point3 p{x, y, r.z};
        if (x + 1 <= r.x_hi) out.insert(Edge(p, {x + 1, y, r.z}));
        if (y + 1 <= r.y_hi) out.insert(Edge(p, {x, y + 1, r.z}));
        if (r.z + 1 <= layers && covered({x, y, r.z + 1}))
          out.insert(Edge(p, {x, y, r.z + 1}));
      }
  return out;
}

ordered_json cost_json(Cost c) {
  if (c == kInfCost) return "inf";
  return c;
}

ordered_json rect_json(const Rect& r) {
  return ordered_json{{"x", {r.x_lo, r.x_hi}}, {"y", {r.y_lo, r.y_hi}}, {"z", r.z}};
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
  }

  reject_unknown(j, "instance",
                 {"grid", "window", "costs", "blocked", "delta", "epsilon", "nets"});

  // Grid.
  const json& jg = member(j, "instance", "grid");
  reject_unknown(jg, "grid", {"xs", "ys", "layers"});
  auto cuts = [&](const char* key) {
    const json& ja = member(jg, "grid", key);
    if (!ja.is_array()) fail(std::string("grid.") + key, "expected an array");
    std::vector<Coord> cs;
    for (std::size_t i = 0; i < ja.size(); ++i)
      cs.push_back(get_coord(ja[i], std::string("grid.") + key + "[" + std::to_string(i) + "]"));
    return cs;
  };
  const std::int64_t layers = get_int(member(jg, "grid", "layers"), "grid.layers");
  if (layers < 1 || layers > 1024) fail("grid.layers", "expected a layer count in 1..1024");
  TileGrid grid(cuts("xs"), cuts("ys"), static_cast<int>(layers));
  if (!grid.valid())
    fail("grid", "cuts must be sorted with no coordinate repeated more than twice");

  Instance inst;
  const int l = grid.layers();

  // Window.
  const json& jw = member(j, "instance", "window");
  reject_unknown(jw, "window", {"x", "y"});
  std::tie(inst.window.x_lo, inst.window.x_hi) = get_span(member(jw, "window", "x"), "window.x");
  std::tie(inst.window.y_lo, inst.window.y_hi) = get_span(member(jw, "window", "y"), "window.y");
  inst.window.layers = l;
  if (!inst.window.valid()) fail("window", "empty window");

  // Costs.
  const json& jc = member(j, "instance", "costs");
  reject_unknown(jc, "costs", {"default", "tiles"});
  const json& jd = member(jc, "costs", "default");
  reject_unknown(jd, "costs.default", {"h", "v", "via"});
  const Cost dh = get_cost(member(jd, "costs.default", "h"), "costs.default.h");
  const Cost dv = get_cost(member(jd, "costs.default", "v"), "costs.default.v");
  const Cost dvia = get_cost(member(jd, "costs.default", "via"), "costs.default.via");
  GeneralCosts gc(grid, kInfCost);
  for (int i = 0; i < grid.cols(); ++i)
    for (int jj = 0; jj < grid.rows(); ++jj)
      for (int z = 1; z <= l; ++z) {
        gc.h(i, jj, z) = dh;
        gc.v(i, jj, z) = dv;
        gc.via(i, jj, z) = z < l ? dvia : kInfCost;
      }
  if (jc.contains("tiles")) {
    const json& jt = jc["tiles"];
    if (!jt.is_array()) fail("costs.tiles", "expected an array");
    for (std::size_t n = 0; n < jt.size(); ++n) {
      const std::string ctx = "costs.tiles[" + std::to_string(n) + "]";
      const json& je = jt[n];
      reject_unknown(je, ctx, {"i", "j", "z", "h", "v", "via"});
      const std::int64_t i = get_int(member(je, ctx, "i"), ctx + ".i");
      const std::int64_t jj = get_int(member(je, ctx, "j"), ctx + ".j");
      const std::int64_t z = get_int(member(je, ctx, "z"), ctx + ".z");
      if (i < 0 || i >= grid.cols()) fail(ctx + ".i", "column index out of range");
      if (jj < 0 || jj >= grid.rows()) fail(ctx + ".j", "row index out of range");
      if (z < 1 || z > l) fail(ctx + ".z", "layer out of range");
      const int ii = static_cast<int>(i), ji = static_cast<int>(jj), zi = static_cast<int>(z);
      if (je.contains("h")) gc.h(ii, ji, zi) = get_cost(je["h"], ctx + ".h");
      if (je.contains("v")) gc.v(ii, ji, zi) = get_cost(je["v"], ctx + ".v");
      if (je.contains("via")) {
        if (zi == l) fail(ctx + ".via", "no via above the top layer");
        gc.via(ii, ji, zi) = get_cost(je["via"], ctx + ".via");
      }
    }
  }
  inst.costs = std::move(gc);

  // Blocked rectangles.
  if (j.contains("blocked")) {
    const json& jb = j["blocked"];
    if (!jb.is_array()) fail("blocked", "expected an array");
    for (std::size_t n = 0; n < jb.size(); ++n) {
      const std::string ctx = "blocked[" + std::to_string(n) + "]";
      const Rect r = get_rect(jb[n], ctx, l);
      check_in_window(r, inst.window, ctx);
      inst.blocked.push_back(r);
    }
  }

  // Discount and layer-tree exponent.
  if (j.contains("delta"))
    std::tie(inst.delta_num, inst.delta_den) = get_fraction(j["delta"], "delta", 1000000);
  if (j.contains("epsilon"))
    std::tie(inst.eps_num, inst.eps_den) = get_fraction(j["epsilon"], "epsilon", 16);

  // Nets.
  if (j.contains("nets")) {
    const json& jn = j["nets"];
    if (!jn.is_array()) fail("nets", "expected an array");
    std::set<std::string> names;
    for (std::size_t n = 0; n < jn.size(); ++n) {
      const std::string ctx = "nets[" + std::to_string(n) + "]";
      const json& je = jn[n];
      reject_unknown(je, ctx, {"name", "pins", "reserved"});
      NetSpec net;
      const json& jname = member(je, ctx, "name");
      if (!jname.is_string() || jname.get<std::string>().empty())
        fail(ctx + ".name", "expected a non-empty string");
      net.name = jname.get<std::string>();
      if (!names.insert(net.name).second) fail(ctx + ".name", "duplicate net name");
      const json& jp = member(je, ctx, "pins");
      if (!jp.is_array() || jp.empty()) fail(ctx + ".pins", "expected a non-empty array");
      for (std::size_t m = 0; m < jp.size(); ++m) {
        const std::string pctx = ctx + ".pins[" + std::to_string(m) + "]";
        const Rect r = get_rect(jp[m], pctx, l);
        check_in_window(r, inst.window, pctx);
        for (const Rect& b : inst.blocked)
          if (b.z == r.z && b.x_lo <= r.x_hi && r.x_lo <= b.x_hi && b.y_lo <= r.y_hi &&
              r.y_lo <= b.y_hi)
            fail(pctx, "pin " + rect_text(r) + " overlaps a blocked rect");
        net.pins.push_back(r);
      }
      if (je.contains("reserved")) {
        const json& jr = je["reserved"];
        if (!jr.is_array()) fail(ctx + ".reserved", "expected an array");
        for (std::size_t m = 0; m < jr.size(); ++m) {
          const std::string rctx = ctx + ".reserved[" + std::to_string(m) + "]";
          const Rect r = get_rect(jr[m], rctx, l);
          check_in_window(r, inst.window, rctx);
          net.reserved.push_back(r);
        }
      }
      inst.nets.push_back(std::move(net));
    }
  }

  // Reservations of distinct nets must not share an edge.
  std::vector<std::unordered_set<Edge, EdgeHash>> resv;
  for (const NetSpec& net : inst.nets) resv.push_back(reservation_edges(net.reserved, l));
  for (std::size_t a = 0; a < resv.size(); ++a)
    for (std::size_t b = a + 1; b < resv.size(); ++b) {
      const auto& small = resv[a].size() <= resv[b].size() ? resv[a] : resv[b];
      const auto& large = resv[a].size() <= resv[b].size() ? resv[b] : resv[a];
      for (const Edge& e : small)
        if (large.count(e))
          fail("nets", "reservations of \"" + inst.nets[a].name + "\" and \"" +
                           inst.nets[b].name + "\" share the edge at (" +
                           std::to_string(e.a.x) + "," + std::to_string(e.a.y) + "," +
                           std::to_string(e.a.z) + ")");
    }

  if (!inst.costs.valid()) fail("costs", "invalid cost table");
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const TileGrid& g = inst.costs.grid();
  const int l = g.layers();

  // The most common (h, v, via) triple becomes the default; top-layer tiles
  // (which have no via) count and compare with an infinite via slot.
  std::map<std::tuple<Cost, Cost, Cost>, int> freq;
  for (int z = 1; z <= l; ++z)
    for (int j = 0; j < g.rows(); ++j)
      for (int i = 0; i < g.cols(); ++i)
        ++freq[{inst.costs.h(i, j, z), inst.costs.v(i, j, z),
                z < l ? inst.costs.via(i, j, z) : kInfCost}];
  std::tuple<Cost, Cost, Cost> def = freq.begin()->first;
  for (const auto& [triple, count] : freq)
    if (count > freq[def]) def = triple;
  const auto [dh, dv, dvia] = def;

  ordered_json out;
  out["grid"] = {{"xs", g.xs()}, {"ys", g.ys()}, {"layers", l}};
  out["window"] = {{"x", {inst.window.x_lo, inst.window.x_hi}},
                   {"y", {inst.window.y_lo, inst.window.y_hi}}};
  out["costs"] = {{"default", {{"h", cost_json(dh)}, {"v", cost_json(dv)},
                               {"via", cost_json(dvia)}}}};
  ordered_json tiles = ordered_json::array();
  for (int z = 1; z <= l; ++z)
    for (int j = 0; j < g.rows(); ++j)
      for (int i = 0; i < g.cols(); ++i) {
        const Cost h = inst.costs.h(i, j, z), v = inst.costs.v(i, j, z);
        const Cost via = z < l ? inst.costs.via(i, j, z) : kInfCost;
        if (h == dh && v == dv && (z == l || via == dvia)) continue;
        ordered_json e{{"i", i}, {"j", j}, {"z", z}};
        if (h != dh) e["h"] = cost_json(h);
        if (v != dv) e["v"] = cost_json(v);
        if (z < l && via != dvia) e["via"] = cost_json(via);
        tiles.push_back(std::move(e));
      }
  out["costs"]["tiles"] = std::move(tiles);
  ordered_json blocked = ordered_json::array();
  for (const Rect& r : inst.blocked) blocked.push_back(rect_json(r));
  out["blocked"] = std::move(blocked);
  out["delta"] = std::to_string(inst.delta_num) + "/" + std::to_string(inst.delta_den);
  out["epsilon"] = std::to_string(inst.eps_num) + "/" + std::to_string(inst.eps_den);
  ordered_json nets = ordered_json::array();
  for (const NetSpec& net : inst.nets) {
    ordered_json e{{"name", net.name}};
    ordered_json pins = ordered_json::array();
    for (const Rect& r : net.pins) pins.push_back(rect_json(r));
    e["pins"] = std::move(pins);
    ordered_json res = ordered_json::array();
    for (const Rect& r : net.reserved) res.push_back(rect_json(r));
    e["reserved"] = std::move(res);
    nets.push_back(std::move(e));
  }
  out["nets"] = std::move(nets);
  return out.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << serialize_instance(inst);
  if (!out) throw std::runtime_error(path + ": write failed");
}

Subgraph instance_subgraph(const Instance& inst) {
  Subgraph sg(inst.window);
  for (const Rect& r : inst.blocked) sg.block_rect(r);
  return sg;
}

Instance generate_instance(const GenConfig& cfg) {
  if (cfg.p < 0 || cfg.p > 64 || cfg.q < 0 || cfg.q > 64)
    throw std::invalid_argument("generate_instance: cuts must be in 0..64");
  if (cfg.l < 1 || cfg.l > 32) throw std::invalid_argument("generate_instance: layers in 1..32");
  if (cfg.t < 1 || cfg.t > 32) throw std::invalid_argument("generate_instance: pins in 1..32");
  if (cfg.nets < 0 || cfg.nets > 512)
    throw std::invalid_argument("generate_instance: nets in 0..512");
  if (cfg.block_density < 0.0 || cfg.block_density > 1.0 || cfg.reserve_keep < 0.0 ||
      cfg.reserve_keep > 1.0)
    throw std::invalid_argument("generate_instance: probabilities must be in [0, 1]");
  if (cfg.cost_max < 1 || cfg.cost_max > kMaxFiniteCost)
    throw std::invalid_argument("generate_instance: cost_max out of range");

  std::mt19937_64 rng(cfg.seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::int64_t block_lim = std::llround(cfg.block_density * 1000000.0);
  const std::int64_t keep_lim = std::llround(cfg.reserve_keep * 1000000.0);
  auto chance = [&](std::int64_t lim) { return static_cast<std::int64_t>(rng() % 1000000) < lim; };

  const Coord W = 8 * (static_cast<Coord>(cfg.p) + 1);
  const Coord H = 8 * (static_cast<Coord>(cfg.q) + 1);
  auto distinct_cuts = [&](int count, Coord hi) {
    std::set<Coord> s;
    while (static_cast<int>(s.size()) < count) s.insert(draw(1, hi - 1));
    return std::vector<Coord>(s.begin(), s.end());
  };
  TileGrid grid(distinct_cuts(cfg.p, W), distinct_cuts(cfg.q, H), cfg.l);

  Instance inst;
  inst.window = {0, W, 0, H, cfg.l};
  GeneralCosts gc(grid, kInfCost);
  for (int i = 0; i < grid.cols(); ++i)
    for (int j = 0; j < grid.rows(); ++j)
      for (int z = 1; z <= cfg.l; ++z) {
        gc.h(i, j, z) = chance(block_lim) ? kInfCost : draw(1, cfg.cost_max);
        gc.v(i, j, z) = chance(block_lim) ? kInfCost : draw(1, cfg.cost_max);
        if (z < cfg.l) gc.via(i, j, z) = chance(block_lim) ? kInfCost : draw(1, cfg.cost_max);
      }
  inst.costs = std::move(gc);

  // Place pins so every net's pins can reach each other: the first pin must
  // reach at least t vertices (itself included), the rest are drawn from its
  // reach set.
  for (int n = 0; n < cfg.nets; ++n) {
    NetSpec net;
    net.name = "n" + std::to_string(n);
    std::vector<Point3> reach;
    Point3 first;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 200)
        throw std::runtime_error(
            "generate_instance: could not place connectable pins; lower block_density");
      first = {draw(0, W), draw(0, H), static_cast<int>(draw(1, cfg.l))};
      TargetSet t0;
      t0.rects.push_back({first.x, first.x, first.y, first.y, first.z});
      const std::vector<Cost> d = oracle_distances(inst.costs, t0, inst.window);
      reach.clear();
      for (std::int64_t idx = 0; idx < inst.window.vertex_count(); ++idx)
        if (is_finite(d[static_cast<std::size_t>(idx)])) reach.push_back(inst.window.point(idx));
      if (static_cast<int>(reach.size()) >= cfg.t) break;
    }
    std::set<Point3> chosen{first};
    while (static_cast<int>(chosen.size()) < cfg.t)
      chosen.insert(reach[static_cast<std::size_t>(draw(0, static_cast<std::int64_t>(reach.size()) - 1))]);
    net.pins.push_back({first.x, first.x, first.y, first.y, first.z});
    for (const Point3& p : chosen)
      if (!(p == first)) net.pins.push_back({p.x, p.x, p.y, p.y, p.z});
    inst.nets.push_back(std::move(net));
  }

  // Pre-route every net with the cheap potential and keep straight runs of
  // the paths as reservations, never letting two nets reserve the same edge.
  const Subgraph sg = instance_subgraph(inst);
  std::unordered_set<Edge, EdgeHash> taken;
  for (NetSpec& net : inst.nets) {
    const RouteResult rr = route_net(inst.costs, sg, net.pins, {Flavor::kL1});
    if (!rr.connected) continue;
    auto step_kind = [](Point3 a, Point3 b) {  // 0 = x run, 1 = y run, 2 = via
      if (a.z != b.z) return 2;
      return a.y == b.y ? 0 : 1;
    };
    for (const std::vector<Point3>& path : rr.paths) {
      std::size_t s = 0;
      while (s + 1 < path.size()) {
        const int kind = step_kind(path[s], path[s + 1]);
        std::size_t e = s + 1;
        while (e + 1 < path.size() && step_kind(path[e], path[e + 1]) == kind) ++e;
        if (kind != 2 && chance(keep_lim)) {
          const Rect r{std::min(path[s].x, path[e].x), std::max(path[s].x, path[e].x),
                       std::min(path[s].y, path[e].y), std::max(path[s].y, path[e].y),
                       path[s].z};
          std::vector<Edge> edges;
          for (Coord x = r.x_lo; x < r.x_hi; ++x)
            edges.push_back(Edge({x, r.y_lo, r.z}, {x + 1, r.y_lo, r.z}));
          for (Coord y = r.y_lo; y < r.y_hi; ++y)
            edges.push_back(Edge({r.x_lo, y, r.z}, {r.x_lo, y + 1, r.z}));
          bool clash = false;
          for (const Edge& ed : edges) clash = clash || taken.count(ed) > 0;
          if (!clash) {
            for (const Edge& ed : edges) taken.insert(ed);
            net.reserved.push_back(r);
          }
        }
        s = e;
      }
    }
  }
  return inst;
}

}  // namespace gridroute
