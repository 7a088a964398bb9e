#include "polyent/grid.hpp"

#include <algorithm>
#include <cmath>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

// Subdivision count so that spacing 1/k <= mesh; tolerant of 1/mesh landing
// just above an integer in floating point.
long subdivisions(double mesh) {
  return std::max<long>(1, static_cast<long>(std::ceil(1.0 / mesh - 1e-9)));
}

std::vector<double> axis_points(SpaceKind kind, double mesh) {
  const long k = subdivisions(mesh);
  std::vector<double> xs;
  if (kind == SpaceKind::Interval) {
    xs.reserve(k + 1);
    for (long i = 0; i <= k; ++i) xs.push_back(static_cast<double>(i) / k);
  } else {
    xs.reserve(k);
    for (long i = 0; i < k; ++i) xs.push_back(static_cast<double>(i) / k);
  }
  return xs;
}

void tensor(const Space& space, double mesh, Point& prefix,
            std::vector<Point>& out) {
  if (space.kind() != SpaceKind::Product) {
    for (double x : axis_points(space.kind(), mesh)) {
      prefix.push_back(x);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  const auto& factors = space.factors();
  // first factor varies slowest, so the enumeration is lexicographic
  std::vector<Point> heads;
  Point tmp;
  tensor(factors[0], mesh, tmp, heads);
  Space tail_space = factors.size() == 2
                         ? factors[1]
                         : Space::product({factors.begin() + 1, factors.end()});
  for (const auto& head : heads) {
    const std::size_t mark = prefix.size();
    prefix.insert(prefix.end(), head.begin(), head.end());
    tensor(tail_space, mesh, prefix, out);
    prefix.resize(mark);
  }
}

double axis_covering_radius(SpaceKind kind, std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double r;
  if (kind == SpaceKind::Interval) {
    r = std::max(xs.front() - 0.0, 1.0 - xs.back());
    for (std::size_t i = 1; i < xs.size(); ++i)
      r = std::max(r, (xs[i] - xs[i - 1]) / 2.0);
  } else {
    r = (1.0 - xs.back() + xs.front()) / 2.0;
    for (std::size_t i = 1; i < xs.size(); ++i)
      r = std::max(r, (xs[i] - xs[i - 1]) / 2.0);
  }
  return r;
}

}  // namespace

SampleGrid build_grid(const Space& space, double mesh) {
  if (!(mesh > 0.0)) throw input_error("mesh must be positive");
  SampleGrid g;
  g.space = space;
  g.mesh = mesh;
  Point prefix;
  tensor(space, mesh, prefix, g.points);
  std::sort(g.points.begin(), g.points.end(), point_less);
  g.points.erase(std::unique(g.points.begin(), g.points.end()),
                 g.points.end());
  return g;
}

double covering_radius(const Space& space, const std::vector<Point>& points) {
  if (points.empty()) throw input_error("covering radius of an empty cloud");
  const auto kinds = space.coordinate_kinds();
  double r = 0.0;
  for (std::size_t c = 0; c < kinds.size(); ++c) {
    std::vector<double> xs;
    xs.reserve(points.size());
    for (const auto& p : points) xs.push_back(p[c]);
    r = std::max(r, axis_covering_radius(kinds[c], std::move(xs)));
  }
  return r;
}

}  // namespace polyent
