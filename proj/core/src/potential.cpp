#include "gridroute/potential.hpp"

#include <stdexcept>
#include <utility>

#include "gridroute/general_potential.hpp"
#include "gridroute/simple_potential.hpp"

namespace gridroute {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::kZero: return "zero";
    case Flavor::kL1: return "l1";
    case Flavor::kSimple: return "simple";
    case Flavor::kGeneral: return "general";
  }
  return "?";
}

std::optional<Flavor> flavor_from_name(std::string_view s) {
  if (s == "zero") return Flavor::kZero;
  if (s == "l1") return Flavor::kL1;
  if (s == "simple") return Flavor::kSimple;
  if (s == "general") return Flavor::kGeneral;
  return std::nullopt;
}

SimpleCosts to_simple_min(const GeneralCosts& gc) {
  const TileGrid& g = gc.grid();
  const int l = g.layers();
  SimpleCosts sc;
  sc.horiz.assign(l, kInfCost);
  sc.vert.assign(l, kInfCost);
  sc.via.assign(l > 0 ? l - 1 : 0, kInfCost);
  Cost mh = 0, mv = 0, mw = 0;  // most expensive finite cost per direction
  for (int i = 0; i < g.cols(); ++i)
    for (int j = 0; j < g.rows(); ++j)
      for (int z = 1; z <= l; ++z) {
        const Cost h = gc.h(i, j, z), v = gc.v(i, j, z);
        sc.horiz[z - 1] = cost_min(sc.horiz[z - 1], h);
        sc.vert[z - 1] = cost_min(sc.vert[z - 1], v);
        if (is_finite(h)) mh = std::max(mh, h);
        if (is_finite(v)) mv = std::max(mv, v);
        if (z < l) {
          const Cost w = gc.via(i, j, z);
          sc.via[z - 1] = cost_min(sc.via[z - 1], w);
          if (is_finite(w)) mw = std::max(mw, w);
        }
      }
  for (Cost& c : sc.horiz)
    if (!is_finite(c)) c = mh > 0 ? mh : 1;
  for (Cost& c : sc.vert)
    if (!is_finite(c)) c = mv > 0 ? mv : 1;
  for (Cost& c : sc.via)
    if (!is_finite(c)) c = mw > 0 ? mw : 1;
  return sc;
}

namespace {

class ZeroPotential final : public PotentialProvider {
 public:
  Cost at(Point3) const override { return 0; }
  Flavor flavor() const override { return Flavor::kZero; }
};

class L1Potential final : public PotentialProvider {
 public:
  L1Potential(SimpleCosts sc, TargetSet t) : sc_(std::move(sc)), vp_(sc_), t_(std::move(t)) {}
  Cost at(Point3 v) const override { return l1_potential(sc_, vp_, v, t_); }
  Flavor flavor() const override { return Flavor::kL1; }

 private:
  SimpleCosts sc_;
  ViaPrefix vp_;
  TargetSet t_;
};

class SimplePotential final : public PotentialProvider {
 public:
  SimplePotential(const SimpleCosts& sc, const TargetSet& t) : oracle_(sc, t) {}
  Cost at(Point3 v) const override { return oracle_.query(v); }
  Flavor flavor() const override { return Flavor::kSimple; }

 private:
  SimpleOracle oracle_;
};

class GeneralPotential final : public PotentialProvider {
 public:
  GeneralPotential(const GeneralCosts& gc, const TargetSet& t, int en, int ed)
      : oracle_(refine_grid(gc, t), t, en, ed) {}
  Cost at(Point3 v) const override { return oracle_.query(v); }
  Flavor flavor() const override { return Flavor::kGeneral; }

 private:
  GeneralOracle oracle_;
};

}  // namespace

std::unique_ptr<PotentialProvider> make_potential(Flavor f, const GeneralCosts& gc,
                                                  const TargetSet& targets, int eps_num,
                                                  int eps_den) {
  if (f != Flavor::kZero && targets.empty())
    throw std::invalid_argument("potential needs a nonempty target set");
  switch (f) {
    case Flavor::kZero: return std::make_unique<ZeroPotential>();
    case Flavor::kL1: return std::make_unique<L1Potential>(to_simple_min(gc), targets);
    case Flavor::kSimple: return std::make_unique<SimplePotential>(to_simple_min(gc), targets);
    case Flavor::kGeneral:
      return std::make_unique<GeneralPotential>(gc, targets, eps_num, eps_den);
  }
  throw std::invalid_argument("unknown flavor");
}

}  // namespace gridroute
