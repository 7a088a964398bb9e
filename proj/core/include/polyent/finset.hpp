#pragma once

#include <span>
#include <vector>

#include "polyent/grid.hpp"
#include "polyent/map_system.hpp"
#include "polyent/space.hpp"

namespace polyent {

/// A point of F_n(X): between 1 and n pairwise distinct base points, stored
/// canonically sorted so equal sets have identical representations.
/// Distinctness is exact coordinate equality, never tolerance merging.
class FinSet {
 public:
  FinSet(std::vector<Point> elements, int n_bound);

  const std::vector<Point>& elements() const { return elems_; }
  int n_bound() const { return n_bound_; }
  int cardinality() const { return static_cast<int>(elems_.size()); }

  bool operator==(const FinSet& other) const;
  bool operator!=(const FinSet& other) const { return !(*this == other); }

 private:
  std::vector<Point> elems_;
  int n_bound_;
};

/// Hausdorff metric on finite sets: max of the two directed max-min
/// distances under the ground metric of `space`.
double hausdorff_distance(const Space& space, const FinSet& a, const FinSet& b);

/// Induced map F_n(f): pointwise image, re-canonicalized. Cardinality can
/// only drop (exact collisions), never grow.
FinSet induced_map_F(const MapSystem& f, const FinSet& a);

/// Projection pi: X^n -> F_n(X), tuple |-> set of its coordinates.
FinSet project_pi(std::span<const Point> tuple, int n_bound);

inline constexpr unsigned long long kDefaultHyperCap = 200000;

/// Number of nonempty subsets of cardinality <= n from `base_points` points,
/// saturating at 2^63-1.
unsigned long long hyper_grid_size(std::size_t base_points, int n);

/// All nonempty subsets of the base grid of cardinality <= n, ordered by
/// cardinality then lexicographic index order.
struct HyperGrid {
  SampleGrid base;
  int n_bound = 1;
  std::vector<FinSet> members;
};

HyperGrid hyper_grid(const SampleGrid& base, int n,
                     unsigned long long cap = kDefaultHyperCap);

/// All ordered n-tuples of pairwise distinct grid points, flattened into
/// points of the n-fold product space (samples pi^{-1}(G_n)).
std::vector<Point> distinct_tuple_grid(const SampleGrid& base, int n);

/// Members M of the grid with d_H(F_n(f)(M), M) <= tol.
std::vector<FinSet> fixed_sets_of_induced(const MapSystem& f,
                                          const HyperGrid& grid, double tol);

}  // namespace polyent
