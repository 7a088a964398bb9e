#include "polyent/suspension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyent/errors.hpp"

namespace polyent {

SuspPoint SuspPoint::collapsed(int n_bound, int m_bound) {
  if (!(n_bound > m_bound && m_bound >= 1))
    throw input_error("suspension needs n > m >= 1");
  return SuspPoint(n_bound, m_bound);
}

SuspPoint SuspPoint::make_class(FinSet a, int m_bound) {
  if (!(a.n_bound() > m_bound && m_bound >= 1))
    throw input_error("suspension needs n > m >= 1");
  if (a.cardinality() <= m_bound)
    throw input_error("class payload must have cardinality > m");
  SuspPoint p(a.n_bound(), m_bound);
  p.cls_ = std::move(a);
  return p;
}

const FinSet& SuspPoint::class_set() const {
  if (!cls_) throw invariant_error("collapsed point has no class set");
  return *cls_;
}

bool SuspPoint::operator==(const SuspPoint& other) const {
  if (n_bound_ != other.n_bound_ || m_bound_ != other.m_bound_) return false;
  if (is_collapsed() != other.is_collapsed()) return false;
  return is_collapsed() || *cls_ == *other.cls_;
}

namespace {

double interval_radius(std::vector<double> xs) {
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return (*hi - *lo) / 2.0;
}

// Half the shortest closed arc covering the angles: 1 minus the largest gap.
double circle_radius(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double largest_gap = 1.0 - xs.back() + xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    largest_gap = std::max(largest_gap, xs[i] - xs[i - 1]);
  return (1.0 - largest_gap) / 2.0;
}

}  // namespace

double chebyshev_radius(const Space& space, std::span<const Point> pts) {
  if (pts.empty()) throw input_error("chebyshev_radius of an empty set");
  if (pts.size() == 1) return 0.0;
  switch (space.kind()) {
    case SpaceKind::Interval: {
      std::vector<double> xs;
      xs.reserve(pts.size());
      for (const auto& p : pts) xs.push_back(p[0]);
      return interval_radius(std::move(xs));
    }
    case SpaceKind::Circle: {
      std::vector<double> xs;
      xs.reserve(pts.size());
      for (const auto& p : pts) xs.push_back(p[0]);
      return circle_radius(std::move(xs));
    }
    case SpaceKind::Product: {
      // max-metric balls are products of factor balls
      double r = 0.0;
      std::size_t off = 0;
      for (const auto& f : space.factors()) {
        const auto w = static_cast<std::size_t>(f.dimension());
        std::vector<Point> proj;
        proj.reserve(pts.size());
        for (const auto& p : pts)
          proj.emplace_back(p.begin() + off, p.begin() + off + w);
        r = std::max(r, chebyshev_radius(f, proj));
        off += w;
      }
      return r;
    }
  }
  return 0.0;
}

double dist_to_Fm(const Space& space, const FinSet& a, int m) {
  return dist_to_Fm_points(space, a.elements(), m);
}

double dist_to_Fm_points(const Space& space, std::span<const Point> raw,
                         int m) {
  if (m < 1) throw input_error("dist_to_Fm needs m >= 1");
  std::vector<Point> pts(raw.begin(), raw.end());
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int card = static_cast<int>(pts.size());
  if (card <= m) return 0.0;
  // restricted growth strings enumerate set partitions into <= m parts
  std::vector<int> assign(card, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<Point>> parts(m);
  while (true) {
    int used = 0;
    for (int i = 0; i < card; ++i) used = std::max(used, assign[i] + 1);
    for (auto& p : parts) p.clear();
    for (int i = 0; i < card; ++i) parts[assign[i]].push_back(pts[i]);
    double worst = 0.0;
    for (int p = 0; p < used; ++p)
      worst = std::max(worst, chebyshev_radius(space, parts[p]));
    best = std::min(best, worst);
    // next restricted growth string with values < m
    int pos = card - 1;
    while (pos > 0) {
      int prefix_max = 0;
      for (int i = 0; i < pos; ++i) prefix_max = std::max(prefix_max, assign[i]);
      if (assign[pos] < std::min(prefix_max + 1, m - 1)) break;
      --pos;
    }
    if (pos == 0) break;
    ++assign[pos];
    for (int i = pos + 1; i < card; ++i) assign[i] = 0;
  }
  return best;
}

double susp_distance(const Space& space, const SuspPoint& p,
                     const SuspPoint& q) {
  if (p.n_bound() != q.n_bound() || p.m_bound() != q.m_bound())
    throw input_error("susp_distance: mismatched suspension parameters");
  const int m = p.m_bound();
  if (p.is_collapsed() && q.is_collapsed()) return 0.0;
  if (p.is_collapsed()) return dist_to_Fm(space, q.class_set(), m);
  if (q.is_collapsed()) return dist_to_Fm(space, p.class_set(), m);
  const double direct =
      hausdorff_distance(space, p.class_set(), q.class_set());
  const double via_collapse = dist_to_Fm(space, p.class_set(), m) +
                              dist_to_Fm(space, q.class_set(), m);
  return std::min(direct, via_collapse);
}

SuspPoint quotient_q(const FinSet& a, int m) {
  if (a.cardinality() <= m) return SuspPoint::collapsed(a.n_bound(), m);
  return SuspPoint::make_class(a, m);
}

SuspPoint induced_map_S(const MapSystem& f, const SuspPoint& p) {
  if (p.is_collapsed()) return p;
  const FinSet image = induced_map_F(f, p.class_set());
  if (image.cardinality() < p.class_set().cardinality())
    throw invariant_error(
        "induced_map_S: image cardinality dropped for homeomorphism '" +
        f.label + "'");
  return SuspPoint::make_class(image, p.m_bound());
}

SuspGrid susp_grid(const HyperGrid& h, int m) {
  if (!(m >= 1 && m < h.n_bound))
    throw input_error("susp_grid needs 1 <= m < n");
  SuspGrid g;
  g.n_bound = h.n_bound;
  g.m_bound = m;
  g.members.push_back(SuspPoint::collapsed(h.n_bound, m));
  for (const auto& a : h.members)
    if (a.cardinality() > m) g.members.push_back(SuspPoint::make_class(a, m));
  return g;
}

bool iterate_identity_check(const MapSystem& f, int k,
                            std::span<const SuspPoint> probes) {
  if (k < 1) throw input_error("iterate_identity_check needs k >= 1");
  const MapSystem fk = make_power(f, k);
  for (const auto& p : probes) {
    SuspPoint lhs = p;
    for (int i = 0; i < k; ++i) lhs = induced_map_S(f, lhs);
    const SuspPoint rhs = induced_map_S(fk, p);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<SuspPoint> fixed_points_of_suspension(const MapSystem& f,
                                                  const SuspGrid& grid,
                                                  double tol) {
  std::vector<SuspPoint> fixed;
  for (const auto& p : grid.members) {
    const SuspPoint image = induced_map_S(f, p);
    if (susp_distance(f.space, image, p) <= tol) fixed.push_back(p);
  }
  return fixed;
}

}  // namespace polyent
