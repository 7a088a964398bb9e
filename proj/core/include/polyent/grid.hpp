#pragma once

#include <vector>

#include "polyent/space.hpp"

namespace polyent {

/// Finite stand-in for a compact space: a canonically sorted list of pairwise
/// distinct points whose union of mesh-balls covers the space.
struct SampleGrid {
  Space space;
  std::vector<Point> points;
  double mesh = 0.0;
};

/// Uniform grid with the net property for the given mesh. Interval of mesh h:
/// points i/k for k = ceil(1/h); circle: i/k for i < k; products: tensor grid
/// in lexicographic order.
SampleGrid build_grid(const Space& space, double mesh);

/// Covering radius of an arbitrary point list (used when a cloud is assembled
/// from orbits rather than uniform subdivision). Exact for interval/circle,
/// coordinate-wise bound for products.
double covering_radius(const Space& space, const std::vector<Point>& points);

}  // namespace polyent
