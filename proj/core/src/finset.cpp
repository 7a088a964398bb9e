#include "polyent/finset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyent/errors.hpp"

namespace polyent {

FinSet::FinSet(std::vector<Point> elements, int n_bound) : n_bound_(n_bound) {
  if (n_bound < 1) throw input_error("FinSet n_bound must be >= 1");
  if (elements.empty()) throw input_error("FinSet must be nonempty");
  const std::size_t dim = elements.front().size();
  for (const auto& p : elements)
    if (p.size() != dim)
      throw input_error("FinSet elements have mixed dimensions");
  std::sort(elements.begin(), elements.end(), point_less);
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (static_cast<int>(elements.size()) > n_bound)
    throw input_error("FinSet cardinality exceeds its n_bound");
  elems_ = std::move(elements);
}

bool FinSet::operator==(const FinSet& other) const {
  return n_bound_ == other.n_bound_ && elems_ == other.elems_;
}

double hausdorff_distance(const Space& space, const FinSet& a,
                          const FinSet& b) {
  const int dim = space.dimension();
  if (static_cast<int>(a.elements().front().size()) != dim ||
      static_cast<int>(b.elements().front().size()) != dim)
    throw input_error("hausdorff_distance: sets live over different spaces");
  auto directed = [&](const FinSet& from, const FinSet& to) {
    double worst = 0.0;
    for (const auto& p : from.elements()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.elements())
        best = std::min(best, space.distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

FinSet induced_map_F(const MapSystem& f, const FinSet& a) {
  std::vector<Point> images;
  images.reserve(a.elements().size());
  for (const auto& p : a.elements()) images.push_back(f.forward(p));
  return FinSet(std::move(images), a.n_bound());
}

FinSet project_pi(std::span<const Point> tuple, int n_bound) {
  return FinSet(std::vector<Point>(tuple.begin(), tuple.end()), n_bound);
}

unsigned long long hyper_grid_size(std::size_t base_points, int n) {
  const unsigned long long limit = std::numeric_limits<long long>::max();
  unsigned long long total = 0;
  double approx = 1.0;
  unsigned long long binom = 1;
  for (int k = 1; k <= n && k <= static_cast<int>(base_points); ++k) {
    approx = approx * (static_cast<double>(base_points) - k + 1) / k;
    // leave headroom for the exact update's intermediate product
    if (approx * (static_cast<double>(base_points) + 1) >
        static_cast<double>(limit))
      return limit;
    binom = binom * (base_points - k + 1) / k;
    if (total > limit - binom) return limit;
    total += binom;
  }
  return total;
}

HyperGrid hyper_grid(const SampleGrid& base, int n, unsigned long long cap) {
  if (n < 1) throw input_error("hyper_grid order n must be >= 1");
  const auto needed = hyper_grid_size(base.points.size(), n);
  if (needed > cap)
    throw resource_error("hyper_grid would enumerate " +
                             std::to_string(needed) +
                             " members, above the cap of " +
                             std::to_string(cap) +
                             " (set POLYENT_CAP to at least " +
                             std::to_string(needed) + ")",
                         needed);
  HyperGrid h;
  h.base = base;
  h.n_bound = n;
  h.members.reserve(needed);
  const int g = static_cast<int>(base.points.size());
  std::vector<int> idx;
  for (int k = 1; k <= n && k <= g; ++k) {
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Point> elems;
      elems.reserve(k);
      for (int i : idx) elems.push_back(base.points[i]);
      h.members.emplace_back(std::move(elems), n);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == g - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return h;
}

std::vector<Point> distinct_tuple_grid(const SampleGrid& base, int n) {
  const int g = static_cast<int>(base.points.size());
  if (n < 1) throw input_error("distinct_tuple_grid order n must be >= 1");
  if (n > g)
    throw input_error("distinct_tuple_grid: n exceeds the number of grid "
                      "points");
  std::vector<Point> tuples;
  std::vector<int> idx(n, 0);
  const int dim = base.space.dimension();
  while (true) {
    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[i] == idx[j]) {
          distinct = false;
          break;
        }
    if (distinct) {
      Point t;
      t.reserve(static_cast<std::size_t>(n) * dim);
      for (int i = 0; i < n; ++i) {
        const Point& p = base.points[idx[i]];
        t.insert(t.end(), p.begin(), p.end());
      }
      tuples.push_back(std::move(t));
    }
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == g - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < n; ++i) idx[i] = 0;
  }
  return tuples;
}

std::vector<FinSet> fixed_sets_of_induced(const MapSystem& f,
                                          const HyperGrid& grid, double tol) {
  std::vector<FinSet> fixed;
  for (const auto& m : grid.members) {
    const FinSet image = induced_map_F(f, m);
    if (hausdorff_distance(f.space, image, m) <= tol) fixed.push_back(m);
  }
  return fixed;
}

}  // namespace polyent
