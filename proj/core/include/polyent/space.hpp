#pragma once

#include <span>
#include <string>
#include <vector>

namespace polyent {

/// A point is a flat coordinate row; its length must equal the dimension of
/// the space it lives in. Circle coordinates are kept in [0,1).
using Point = std::vector<double>;

enum class SpaceKind { Interval, Circle, Product };

/// Compact base space: the unit interval [0,1], the circle R/Z with
/// circumference 1, or a finite product of such spaces under the max metric.
class Space {
 public:
  static Space interval();
  static Space circle();
  static Space product(std::vector<Space> factors);  // needs >= 2 factors

  SpaceKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  const std::vector<Space>& factors() const { return factors_; }

  double diameter() const;

  /// Ground metric d. Interval: |p-q|; circle: arc length min(|p-q|, 1-|p-q|);
  /// product: max of factor distances.
  double distance(std::span<const double> p, std::span<const double> q) const;

  bool contains(std::span<const double> p) const;
  bool same_as(const Space& other) const;
  std::string describe() const;

  /// Per-coordinate kind with products flattened (length == dimension()).
  std::vector<SpaceKind> coordinate_kinds() const;

 private:
  SpaceKind kind_ = SpaceKind::Interval;
  int dim_ = 1;
  std::vector<Space> factors_;
};

/// Arc distance between two circle coordinates in [0,1).
double circle_arc(double a, double b);

/// Reduce a real to [0,1).
double wrap_unit(double x);

/// One-dimensional coordinate distance for the given kind.
inline double coord_distance(SpaceKind kind, double a, double b) {
  double d = a > b ? a - b : b - a;
  if (kind == SpaceKind::Circle && d > 0.5) d = 1.0 - d;
  return d;
}

/// Canonical total order on points (lexicographic on coordinates).
bool point_less(const Point& a, const Point& b);

}  // namespace polyent
