#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyent/finset.hpp"

namespace polyent {

/// A point of the symmetric product suspension SF_n^m(X) = F_n(X)/F_m(X):
/// either the collapsed class F_X (all sets of cardinality <= m) or the class
/// of a single set with more than m points.
class SuspPoint {
 public:
  static SuspPoint collapsed(int n_bound, int m_bound);
  static SuspPoint make_class(FinSet a, int m_bound);

  bool is_collapsed() const { return !cls_.has_value(); }
  const FinSet& class_set() const;
  int n_bound() const { return n_bound_; }
  int m_bound() const { return m_bound_; }

  bool operator==(const SuspPoint& other) const;
  bool operator!=(const SuspPoint& other) const { return !(*this == other); }

 private:
  SuspPoint(int n_bound, int m_bound) : n_bound_(n_bound), m_bound_(m_bound) {}
  std::optional<FinSet> cls_;
  int n_bound_;
  int m_bound_;
};

/// Chebyshev radius of a finite point list: minimal radius of a ball covering
/// it. Interval: (max-min)/2; circle: half the shortest covering arc;
/// products (max metric): max of factor radii.
double chebyshev_radius(const Space& space, std::span<const Point> pts);

/// Hausdorff distance from A to the nearest member of F_m(X): min over
/// partitions of A into <= m parts of the largest part Chebyshev radius.
/// Zero iff cardinality(A) <= m.
double dist_to_Fm(const Space& space, const FinSet& a, int m);

/// Same, for a raw point list (duplicates allowed and ignored).
double dist_to_Fm_points(const Space& space, std::span<const Point> pts,
                         int m);

/// Collapse metric of the quotient: d([A],[B]) = min(d_H(A,B),
/// d(A,F_m) + d(B,F_m)), d([A], F_X) = d(A,F_m).
double susp_distance(const Space& space, const SuspPoint& p,
                     const SuspPoint& q);

/// Quotient map q: Collapsed iff cardinality <= m.
SuspPoint quotient_q(const FinSet& a, int m);

/// Induced map SF_n(f): fixes the collapsed class, acts by F_n(f) on
/// classes. A cardinality drop on a class is an invariant error (the catalog
/// maps are homeomorphisms).
SuspPoint induced_map_S(const MapSystem& f, const SuspPoint& p);

struct SuspGrid {
  int n_bound = 2;
  int m_bound = 1;
  std::vector<SuspPoint> members;  // one Collapsed first, then classes
};

SuspGrid susp_grid(const HyperGrid& h, int m);

/// Checks (SF_n(f))^k == SF_n(f^k) pointwise (exact equality) on the probes.
bool iterate_identity_check(const MapSystem& f, int k,
                            std::span<const SuspPoint> probes);

/// Members of the grid fixed by SF_n(f) up to tol in the collapse metric.
std::vector<SuspPoint> fixed_points_of_suspension(const MapSystem& f,
                                                  const SuspGrid& grid,
                                                  double tol);

}  // namespace polyent
