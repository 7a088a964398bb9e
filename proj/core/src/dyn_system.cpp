#include "polyent/dyn_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

inline double elem_distance(const StateGeometry& g, const double* a,
                            const double* b) {
  double d = 0.0;
  for (int c = 0; c < g.edim; ++c) {
    double dc = a[c] > b[c] ? a[c] - b[c] : b[c] - a[c];
    if (g.kinds[c] == SpaceKind::Circle && dc > 0.5) dc = 1.0 - dc;
    if (dc > d) d = dc;
  }
  return d;
}

double plain_distance(const StateGeometry& g, const double* a,
                      const double* b) {
  double d = 0.0;
  for (int e = 0; e < g.elems; ++e) {
    const double de = elem_distance(g, a + e * g.edim, b + e * g.edim);
    if (de > d) d = de;
  }
  return d;
}

double padded_hausdorff(const StateGeometry& g, const double* a,
                        const double* b) {
  double worst = 0.0;
  for (int i = 0; i < g.elems; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.elems; ++j)
      best = std::min(best, elem_distance(g, a + i * g.edim, b + j * g.edim));
    if (best > worst) worst = best;
  }
  for (int j = 0; j < g.elems; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.elems; ++i)
      best = std::min(best, elem_distance(g, a + i * g.edim, b + j * g.edim));
    if (best > worst) worst = best;
  }
  return worst;
}

}  // namespace

double StateGeometry::operator()(std::span<const double> a,
                                 std::span<const double> b) const {
  switch (layout) {
    case StateLayout::Plain:
      return plain_distance(*this, a.data(), b.data());
    case StateLayout::PaddedSet:
      return padded_hausdorff(*this, a.data(), b.data());
    case StateLayout::Susp: {
      const bool ca = a[0] != 0.0, cb = b[0] != 0.0;
      if (ca && cb) return 0.0;
      if (ca) return b[1];
      if (cb) return a[1];
      const double direct = padded_hausdorff(*this, a.data() + 2, b.data() + 2);
      return std::min(direct, a[1] + b[1]);
    }
  }
  return 0.0;
}

namespace {

StateGeometry plain_geometry(const Space& base, int elems) {
  StateGeometry g;
  g.layout = StateLayout::Plain;
  g.elems = elems;
  g.edim = base.dimension();
  g.kinds = base.coordinate_kinds();
  return g;
}

void fill_plain_orbits(OrbitCache& cache, const MapSystem& f, int elems) {
  const int edim = f.space.dimension();
  Point scratch(edim);
  for (std::size_t i = 0; i < cache.count(); ++i) {
    for (int k = 1; k < cache.depth(); ++k) {
      const auto prev = cache.row(i, k - 1);
      auto cur = cache.row(i, k);
      for (int e = 0; e < elems; ++e) {
        std::copy_n(prev.data() + e * edim, edim, scratch.begin());
        const Point img = f.forward(scratch);
        std::copy_n(img.begin(), edim, cur.data() + e * edim);
      }
    }
  }
}

}  // namespace

StateCloud make_base_cloud(const MapSystem& f, const SampleGrid& cloud,
                           int depth) {
  if (depth < 1) throw input_error("orbit depth must be >= 1");
  StateCloud sc;
  sc.geom = plain_geometry(f.space, 1);
  sc.cache = OrbitCache(cloud.points.size(), depth, sc.geom.width());
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    auto r0 = sc.cache.row(i, 0);
    std::copy(cloud.points[i].begin(), cloud.points[i].end(), r0.begin());
  }
  fill_plain_orbits(sc.cache, f, 1);
  sc.description = f.label + " on " + std::to_string(cloud.points.size()) +
                   " states of " + f.space.describe();
  return sc;
}

StateCloud make_power_tuple_cloud(const MapSystem& f, const SampleGrid& base,
                                  int n, int depth) {
  if (n < 1) throw input_error("tuple order must be >= 1");
  const std::size_t g = base.points.size();
  double total = 1.0;
  for (int i = 0; i < n; ++i) total *= static_cast<double>(g);
  if (total > 4e6)
    throw resource_error("full tuple grid too large",
                         static_cast<unsigned long long>(total));
  StateCloud sc;
  sc.geom = plain_geometry(f.space, n);
  const int edim = f.space.dimension();
  const auto count = static_cast<std::size_t>(total);
  sc.cache = OrbitCache(count, depth, sc.geom.width());
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto r0 = sc.cache.row(i, 0);
    for (int e = 0; e < n; ++e) {
      const Point& p = base.points[idx[e]];
      std::copy(p.begin(), p.end(), r0.data() + e * edim);
    }
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == g - 1) idx[pos--] = 0;
    if (pos >= 0) ++idx[pos];
  }
  fill_plain_orbits(sc.cache, f, n);
  sc.description = f.label + "^x" + std::to_string(n) + " on " +
                   std::to_string(count) + " tuples";
  return sc;
}

StateCloud make_product_cloud(const MapSystem& f, const MapSystem& g,
                              const SampleGrid& gf, const SampleGrid& gg,
                              int depth) {
  const MapSystem prod = make_product(f, g);
  StateCloud sc;
  sc.geom = plain_geometry(prod.space, 1);
  const std::size_t count = gf.points.size() * gg.points.size();
  sc.cache = OrbitCache(count, depth, sc.geom.width());
  std::size_t i = 0;
  for (const auto& a : gf.points)
    for (const auto& b : gg.points) {
      auto r0 = sc.cache.row(i, 0);
      std::copy(a.begin(), a.end(), r0.begin());
      std::copy(b.begin(), b.end(), r0.begin() + a.size());
      ++i;
    }
  fill_plain_orbits(sc.cache, prod, 1);
  sc.description = prod.label + " on " + std::to_string(count) + " pairs";
  return sc;
}

StateCloud make_hyper_cloud(const MapSystem& f, const SampleGrid& base, int n,
                            int depth, unsigned long long cap) {
  const HyperGrid h = hyper_grid(base, n, cap);
  StateCloud sc;
  sc.geom = plain_geometry(f.space, n);
  sc.geom.layout = StateLayout::PaddedSet;
  const int edim = f.space.dimension();
  sc.cache = OrbitCache(h.members.size(), depth, sc.geom.width());
  for (std::size_t i = 0; i < h.members.size(); ++i) {
    auto r0 = sc.cache.row(i, 0);
    const auto& elems = h.members[i].elements();
    for (int e = 0; e < n; ++e) {
      const Point& p = elems[std::min<std::size_t>(e, elems.size() - 1)];
      std::copy(p.begin(), p.end(), r0.data() + e * edim);
    }
  }
  fill_plain_orbits(sc.cache, f, n);
  sc.description = "F_" + std::to_string(n) + "(" + f.label + ") on " +
                   std::to_string(h.members.size()) + " sets over " +
                   std::to_string(base.points.size()) + " base points";
  return sc;
}

StateCloud make_susp_cloud(const MapSystem& f, const SampleGrid& base, int n,
                           int m, int depth, unsigned long long cap) {
  if (!(m >= 1 && m < n)) throw input_error("susp cloud needs 1 <= m < n");
  const HyperGrid h = hyper_grid(base, n, cap);
  StateCloud sc;
  sc.geom = plain_geometry(f.space, n);
  sc.geom.layout = StateLayout::Susp;
  const int edim = f.space.dimension();
  std::vector<const FinSet*> classes;
  for (const auto& a : h.members)
    if (a.cardinality() > m) classes.push_back(&a);
  sc.cache = OrbitCache(classes.size() + 1, depth, sc.geom.width());
  // state 0 is the collapsed class; its whole orbit row stays zero with the
  // flag set
  for (int k = 0; k < depth; ++k) sc.cache.row(0, k)[0] = 1.0;
  std::vector<Point> scratch;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto r0 = sc.cache.row(i + 1, 0);
    const auto& elems = classes[i]->elements();
    r0[0] = 0.0;
    for (int e = 0; e < n; ++e) {
      const Point& p = elems[std::min<std::size_t>(e, elems.size() - 1)];
      std::copy(p.begin(), p.end(), r0.data() + 2 + e * edim);
    }
    r0[1] = dist_to_Fm_points(f.space, elems, m);
  }
  // iterate classes elementwise and refresh the radius channel
  Point elem(edim);
  std::vector<Point> pts(n, Point(edim));
  for (std::size_t i = 1; i < sc.cache.count(); ++i) {
    for (int k = 1; k < depth; ++k) {
      const auto prev = sc.cache.row(i, k - 1);
      auto cur = sc.cache.row(i, k);
      cur[0] = 0.0;
      for (int e = 0; e < n; ++e) {
        std::copy_n(prev.data() + 2 + e * edim, edim, elem.begin());
        const Point img = f.forward(elem);
        std::copy(img.begin(), img.end(), cur.data() + 2 + e * edim);
        std::copy(img.begin(), img.end(), pts[e].begin());
      }
      cur[1] = dist_to_Fm_points(f.space, pts, m);
    }
  }
  sc.description = "SF_" + std::to_string(n) + "^" + std::to_string(m) + "(" +
                   f.label + ") on " + std::to_string(sc.cache.count()) +
                   " states over " + std::to_string(base.points.size()) +
                   " base points";
  return sc;
}

StateCloud make_tuple_cloud(const MapSystem& f, const SampleGrid& base, int n,
                            int depth) {
  const auto tuples = distinct_tuple_grid(base, n);
  StateCloud sc;
  sc.geom = plain_geometry(f.space, n);
  sc.cache = OrbitCache(tuples.size(), depth, sc.geom.width());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto r0 = sc.cache.row(i, 0);
    std::copy(tuples[i].begin(), tuples[i].end(), r0.begin());
  }
  fill_plain_orbits(sc.cache, f, n);
  sc.description = f.label + "^x" + std::to_string(n) + " on " +
                   std::to_string(tuples.size()) +
                   " distinct-coordinate tuples";
  return sc;
}

}  // namespace polyent
