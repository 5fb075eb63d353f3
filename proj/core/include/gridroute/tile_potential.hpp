#pragma once

#include <memory>

#include "gridroute/model.hpp"
#include "gridroute/potential.hpp"

namespace gridroute {

// Alternative exact-distance provider that labels whole tiles with
// two-variable affine functions instead of labeling boundary segments.
// Every tile carries a small set of functions whose pointwise minimum is the
// distance to the targets on the closed tile; a query takes the minimum over
// the tiles containing the point.  Typically a handful of functions per tile
// survive, so queries are a short scan instead of a point location.
//
// Exactness relies on an area-restricted cost shape, the shape produced by
// restricting a uniform per-layer model to a routing area: on every layer
// all finite horizontal costs agree and all finite vertical costs agree
// (likewise per layer pair for vias), a tile's horizontal and vertical costs
// are either both finite or both infinite, and a finite via has finite plane
// costs on both of its layers.  Throws std::invalid_argument when the costs
// are not of this shape.  Arbitrary per-tile costs need the segment labeling
// instead: an edge on the boundary between two differently-priced finite
// tiles takes the cheaper side, which no family of tile-wide affine
// functions can express.
std::unique_ptr<PotentialProvider> make_tile_potential(const GeneralCosts& gc,
                                                       const TargetSet& targets);

}  // namespace gridroute
