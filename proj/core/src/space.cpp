#include "polyent/space.hpp"

#include <algorithm>
#include <cmath>

#include "polyent/errors.hpp"

namespace polyent {

Space Space::interval() {
  Space s;
  s.kind_ = SpaceKind::Interval;
  s.dim_ = 1;
  return s;
}

Space Space::circle() {
  Space s;
  s.kind_ = SpaceKind::Circle;
  s.dim_ = 1;
  return s;
}

Space Space::product(std::vector<Space> factors) {
  if (factors.size() < 2)
    throw input_error("product space needs at least 2 factors");
  Space s;
  s.kind_ = SpaceKind::Product;
  s.dim_ = 0;
  for (const auto& f : factors) s.dim_ += f.dimension();
  s.factors_ = std::move(factors);
  return s;
}

double Space::diameter() const {
  switch (kind_) {
    case SpaceKind::Interval: return 1.0;
    case SpaceKind::Circle: return 0.5;
    case SpaceKind::Product: {
      double d = 0.0;
      for (const auto& f : factors_) d = std::max(d, f.diameter());
      return d;
    }
  }
  return 1.0;
}

double Space::distance(std::span<const double> p,
                       std::span<const double> q) const {
  if (static_cast<int>(p.size()) != dim_ || static_cast<int>(q.size()) != dim_)
    throw input_error("point dimension does not match space dimension");
  switch (kind_) {
    case SpaceKind::Interval:
      return std::fabs(p[0] - q[0]);
    case SpaceKind::Circle:
      return circle_arc(p[0], q[0]);
    case SpaceKind::Product: {
      double d = 0.0;
      std::size_t off = 0;
      for (const auto& f : factors_) {
        const auto w = static_cast<std::size_t>(f.dimension());
        d = std::max(d, f.distance(p.subspan(off, w), q.subspan(off, w)));
        off += w;
      }
      return d;
    }
  }
  return 0.0;
}

bool Space::contains(std::span<const double> p) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  switch (kind_) {
    case SpaceKind::Interval:
      return p[0] >= 0.0 && p[0] <= 1.0;
    case SpaceKind::Circle:
      return p[0] >= 0.0 && p[0] < 1.0;
    case SpaceKind::Product: {
      std::size_t off = 0;
      for (const auto& f : factors_) {
        const auto w = static_cast<std::size_t>(f.dimension());
        if (!f.contains(p.subspan(off, w))) return false;
        off += w;
      }
      return true;
    }
  }
  return false;
}

bool Space::same_as(const Space& other) const {
  if (kind_ != other.kind_ || dim_ != other.dim_) return false;
  if (kind_ != SpaceKind::Product) return true;
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i].same_as(other.factors_[i])) return false;
  return true;
}

std::string Space::describe() const {
  switch (kind_) {
    case SpaceKind::Interval: return "[0,1]";
    case SpaceKind::Circle: return "S1";
    case SpaceKind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += factors_[i].describe();
      }
      return s;
    }
  }
  return "?";
}

std::vector<SpaceKind> Space::coordinate_kinds() const {
  switch (kind_) {
    case SpaceKind::Interval: return {SpaceKind::Interval};
    case SpaceKind::Circle: return {SpaceKind::Circle};
    case SpaceKind::Product: {
      std::vector<SpaceKind> ks;
      ks.reserve(static_cast<std::size_t>(dim_));
      for (const auto& f : factors_) {
        auto sub = f.coordinate_kinds();
        ks.insert(ks.end(), sub.begin(), sub.end());
      }
      return ks;
    }
  }
  return {};
}

double circle_arc(double a, double b) {
  double d = std::fabs(a - b);
  return d > 0.5 ? 1.0 - d : d;
}

double wrap_unit(double x) {
  double y = x - std::floor(x);
  if (y >= 1.0) y = 0.0;  // guards against x just below an integer rounding up
  return y;
}

bool point_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace polyent
