#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyent/space.hpp"

namespace polyent {

/// A self-homeomorphism of a base space given by closed-form forward and
/// inverse rules, with its fixed points declared up front. `all_nonwandering`
/// marks maps whose every point is non-wandering (identity, rational
/// rotation); such maps admit no coding letters.
struct MapSystem {
  Space space;
  std::function<Point(const Point&)> forward;
  std::function<Point(const Point&)> inverse;
  std::vector<Point> declared_fixed;
  std::string label;
  bool all_nonwandering = false;

  Point step(const Point& p) const { return forward(p); }
};

/// Interval catalog: "identity", "square" (x^2), "sqrt", "threefix"
/// (piecewise monotone, Fix = {0, 1/2, 1}).
MapSystem make_interval_map(const std::string& family,
                            const std::vector<double>& params = {});

/// Circle catalog: "identity", "northsouth" (param delta in (0,1), default
/// 0.5; Fix = {0, 1/2}), "rotation" (param p/q passed as two values {p, q}).
MapSystem make_circle_map(const std::string& family,
                          const std::vector<double>& params = {});

/// Parse "family" / "family:a" / "family:p/q" spec strings used by configs.
MapSystem make_map(const std::string& spec);

/// k-fold composition f^k (inverse composed accordingly).
MapSystem make_power(const MapSystem& f, int k);

/// Coordinatewise product f x g on the product space.
MapSystem make_product(const MapSystem& f, const MapSystem& g);

/// Conjugate h o f o h^{-1}. The pair (h, h_inv) is round-trip checked on
/// sample points; failure is an input error.
MapSystem make_conjugate(std::function<Point(const Point&)> h,
                         std::function<Point(const Point&)> h_inv,
                         const MapSystem& f, const std::string& label = "conj");

struct OrbitTable {
  Point start;
  int horizon = 0;
  std::vector<Point> states;  // x, f(x), ..., f^{horizon-1}(x)
};

OrbitTable iterate_orbit(const MapSystem& f, const Point& x0, int horizon);

struct LimitSetReport {
  Point point;
  std::vector<Point> omega;
  std::vector<Point> alpha;
  bool converged = false;
};

/// Omega/alpha limit sets from the orbit tails after `burn` steps, clustered
/// at resolution cluster_tol. Alpha uses the declared inverse rule.
LimitSetReport limit_sets(const MapSystem& f, const Point& x0, int burn,
                          int horizon, double cluster_tol = 1e-6);

/// Midpoints of the wandering channels (arcs/segments between adjacent
/// declared fixed points). Empty for all-non-wandering maps.
std::vector<Point> channel_seeds(const MapSystem& f);

}  // namespace polyent
