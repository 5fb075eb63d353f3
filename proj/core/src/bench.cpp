#include "gridroute/bench.hpp"

#include "gridroute/router.hpp"

namespace gridroute {

std::vector<BenchRow> run_benchmark(const Instance& inst, const std::string& chip,
                                    const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::size_t n = 0; n < inst.nets.size(); ++n) {
    const NetSpec& net = inst.nets[n];

    GeneralCosts gc = inst.costs;
    Subgraph sg = instance_subgraph(inst);
    if (cfg.incremental) {
      gc = discounted_costs(inst.costs, net.reserved, inst.delta_num, inst.delta_den);
      std::vector<Rect> others;
      for (std::size_t m = 0; m < inst.nets.size(); ++m)
        if (m != n)
          others.insert(others.end(), inst.nets[m].reserved.begin(),
                        inst.nets[m].reserved.end());
      block_rect_edges(sg, others);
    }

    for (Flavor f : cfg.flavors) {
      const RouteResult rr =
          route_net(gc, sg, net.pins, {f, inst.eps_num, inst.eps_den});
      BenchRow row;
      row.chip = chip;
      row.net = net.name;
      row.flavor = f;
      if (cfg.timing) {
        row.prep_us = rr.prep_us;
        row.search_us = rr.search_us;
      }
      row.labeled = rr.search.labeled;
      row.popped = rr.search.popped;
      row.cost = rr.connected ? rr.cost : -1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& os) {
  os << "chip,net,flavor,prep_us,search_us,labeled,popped,cost\n";
  for (const BenchRow& r : rows)
    os << r.chip << ',' << r.net << ',' << flavor_name(r.flavor) << ',' << r.prep_us << ','
       << r.search_us << ',' << r.labeled << ',' << r.popped << ',' << r.cost << '\n';
}

}  // namespace gridroute
