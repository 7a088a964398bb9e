#include "polyent/packing.hpp"

#include <vector>

#include "polyent/errors.hpp"

namespace polyent {

double dyn_distance(const OrbitCache& cache, const StateGeometry& geom,
                    std::size_t i, std::size_t j, int time_depth) {
  if (time_depth < 1 || time_depth > cache.depth())
    throw input_error("dyn_distance depth out of range");
  double m = 0.0;
  for (int k = 0; k < time_depth; ++k) {
    const double d = geom(cache.row(i, k), cache.row(j, k));
    if (d > m) m = d;
  }
  return m;
}

namespace {

// Greedy maximal separated scan in canonical (cache) order. A candidate is
// kept iff its dynamic distance to every kept state is >= eps; the scan of a
// kept state stops as soon as the running max reaches eps.
long greedy_net(const OrbitCache& cache, const StateGeometry& geom,
                int time_depth, double eps) {
  if (!(eps > 0.0)) throw input_error("eps must be positive");
  if (time_depth < 1 || time_depth > cache.depth())
    throw input_error("time depth out of range for this orbit cache");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cache.count(); ++i) {
    bool separated = true;
    for (const std::size_t j : kept) {
      bool reaches_eps = false;
      for (int k = 0; k < time_depth; ++k) {
        if (geom(cache.row(i, k), cache.row(j, k)) >= eps) {
          reaches_eps = true;
          break;
        }
      }
      if (!reaches_eps) {  // within eps of kept state j
        separated = false;
        break;
      }
    }
    if (separated) kept.push_back(i);
  }
  return static_cast<long>(kept.size());
}

}  // namespace

long greedy_separated(const OrbitCache& cache, const StateGeometry& geom,
                      int time_depth, double eps) {
  return greedy_net(cache, geom, time_depth, eps);
}

long greedy_cover(const OrbitCache& cache, const StateGeometry& geom,
                  int time_depth, double eps) {
  // first-fit cover: a state not within eps of any center becomes a center;
  // the centers form a maximal separated set, so the construction is shared
  return greedy_net(cache, geom, time_depth, eps);
}

}  // namespace polyent
