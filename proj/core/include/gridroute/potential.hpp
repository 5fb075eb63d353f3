#pragma once

#include <memory>
#include <optional>
#include <string_view>

#include "gridroute/model.hpp"

namespace gridroute {

enum class Flavor { kZero, kL1, kSimple, kGeneral };

const char* flavor_name(Flavor f);
std::optional<Flavor> flavor_from_name(std::string_view s);

// Feasible potential for goal-oriented search: a lower bound on the distance
// to the target set that changes by at most the edge cost across any edge and
// vanishes on the targets.  The four flavors form a chain
// zero <= l1 <= simple <= general <= true distance, pointwise.
class PotentialProvider {
 public:
  virtual ~PotentialProvider() = default;
  virtual Cost at(Point3 v) const = 0;
  virtual Flavor flavor() const = 0;
};

// Uniform per-layer lower bound of a tile model: the cheapest finite cost per
// layer and direction.  A layer with no finite tile in some direction falls
// back to the most expensive finite cost of that direction anywhere (or 1),
// which still underestimates because no real edge there is usable at all.
SimpleCosts to_simple_min(const GeneralCosts& gc);

// Builds a potential toward the given targets.  kGeneral refines the grid by
// the target rectangles internally, so arbitrary point/line targets are fine.
std::unique_ptr<PotentialProvider> make_potential(Flavor f, const GeneralCosts& gc,
                                                  const TargetSet& targets, int eps_num = 1,
                                                  int eps_den = 2);

}  // namespace gridroute
