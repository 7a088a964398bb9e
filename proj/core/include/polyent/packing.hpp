#pragma once

#include "polyent/dyn_system.hpp"

namespace polyent {

/// Separated/covering counts for one (epsilon, time depth) pair.
struct CountRecord {
  double epsilon = 0.0;
  int time_depth = 1;
  long separated = 0;
  long covering = 0;
};

/// Dynamic metric d_n(x,y) = max_{0<=k<n} d(f^k x, f^k y) over cached orbits.
double dyn_distance(const OrbitCache& cache, const StateGeometry& geom,
                    std::size_t i, std::size_t j, int time_depth);

/// Size of the greedy maximal (n, eps)-separated subset, scanning states in
/// canonical order (deterministic). Every kept pair is at dynamic distance
/// >= eps; every rejected state is within eps of a kept one.
long greedy_separated(const OrbitCache& cache, const StateGeometry& geom,
                      int time_depth, double eps);

/// Size of the greedy first-fit cover by dynamic eps-balls centered at cloud
/// states (a maximal separated set doubles as a cover; same scan order).
long greedy_cover(const OrbitCache& cache, const StateGeometry& geom,
                  int time_depth, double eps);

}  // namespace polyent
