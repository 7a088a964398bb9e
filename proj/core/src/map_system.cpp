#include "polyent/map_system.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

constexpr double kFixedTol = 1e-12;

Point pt(double x) { return Point{x}; }

// Solves lift(y) = x for a strictly increasing circle lift with
// lift(y) - y bounded by `amp`: bisection bracket then Newton polish.
double invert_monotone_lift(const std::function<double(double)>& lift,
                            const std::function<double(double)>& dlift,
                            double x, double amp) {
  double lo = x - amp, hi = x + amp;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (lift(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  double y = 0.5 * (lo + hi);
  for (int i = 0; i < 8; ++i) {
    const double g = lift(y) - x;
    const double d = dlift(y);
    if (d <= 0.0) break;
    const double step = g / d;
    y -= step;
    if (std::fabs(step) < 1e-17) break;
  }
  return y;
}

void check_declared_fixed(const MapSystem& f) {
  for (const auto& p : f.declared_fixed) {
    const Point image = f.forward(p);
    if (f.space.distance(image, p) > kFixedTol)
      throw invariant_error("declared fixed point of '" + f.label +
                            "' moves under the map");
  }
}

// Round-trip check on deterministic sample points.
void check_roundtrip(const MapSystem& f, int samples, double tol,
                     const char* what) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int dim = f.space.dimension();
  for (int s = 0; s < samples; ++s) {
    Point p(dim);
    for (int c = 0; c < dim; ++c) p[c] = uni(rng);
    if (f.space.kind() == SpaceKind::Circle) p[0] = wrap_unit(p[0]);
    const Point q = f.inverse(f.forward(p));
    if (f.space.distance(p, q) > tol)
      throw input_error(std::string(what) + ": inverse round-trip exceeds " +
                        std::to_string(tol));
  }
}

}  // namespace

MapSystem make_interval_map(const std::string& family,
                            const std::vector<double>& params) {
  (void)params;
  MapSystem f;
  f.space = Space::interval();
  f.label = family;
  if (family == "identity") {
    f.forward = [](const Point& p) { return p; };
    f.inverse = [](const Point& p) { return p; };
    f.declared_fixed = {pt(0.0), pt(0.5), pt(1.0)};
    f.all_nonwandering = true;
  } else if (family == "square") {
    f.forward = [](const Point& p) { return pt(p[0] * p[0]); };
    f.inverse = [](const Point& p) { return pt(std::sqrt(p[0])); };
    f.declared_fixed = {pt(0.0), pt(1.0)};
  } else if (family == "sqrt") {
    f.forward = [](const Point& p) { return pt(std::sqrt(p[0])); };
    f.inverse = [](const Point& p) { return pt(p[0] * p[0]); };
    f.declared_fixed = {pt(0.0), pt(1.0)};
  } else if (family == "threefix") {
    // monotone, fixes exactly {0, 1/2, 1}: squares on [0,1/2], square-roots
    // on [1/2,1] in local coordinates
    f.forward = [](const Point& p) {
      const double x = p[0];
      return pt(x <= 0.5 ? 2.0 * x * x : 0.5 + 0.5 * std::sqrt(2.0 * (x - 0.5)));
    };
    f.inverse = [](const Point& p) {
      const double y = p[0];
      return pt(y <= 0.5 ? std::sqrt(0.5 * y) : 0.5 + 2.0 * (y - 0.5) * (y - 0.5));
    };
    f.declared_fixed = {pt(0.0), pt(0.5), pt(1.0)};
  } else {
    throw input_error("unknown interval map family '" + family + "'");
  }
  check_declared_fixed(f);
  return f;
}

MapSystem make_circle_map(const std::string& family,
                          const std::vector<double>& params) {
  MapSystem f;
  f.space = Space::circle();
  f.label = family;
  if (family == "identity") {
    f.forward = [](const Point& p) { return p; };
    f.inverse = [](const Point& p) { return p; };
    f.declared_fixed = {pt(0.0), pt(0.5)};
    f.all_nonwandering = true;
  } else if (family == "northsouth") {
    const double delta = params.empty() ? 0.5 : params[0];
    if (!(delta > 0.0 && delta < 1.0))
      throw input_error("northsouth delta must lie in (0,1)");
    const double c = delta / (2.0 * std::acos(-1.0));
    const double twopi = 2.0 * std::acos(-1.0);
    auto lift = [c, twopi](double x) { return x - c * std::sin(twopi * x); };
    auto dlift = [c, twopi](double x) {
      return 1.0 - c * twopi * std::cos(twopi * x);
    };
    f.forward = [lift](const Point& p) { return pt(wrap_unit(lift(p[0]))); };
    f.inverse = [lift, dlift, c](const Point& p) {
      return pt(wrap_unit(invert_monotone_lift(lift, dlift, p[0], c + 1e-9)));
    };
    f.label = "northsouth:" + std::to_string(delta);
    // the lift fixes exactly sin(2 pi x) = 0, i.e. {0, 1/2}; verified below
    f.declared_fixed = {pt(0.0), pt(0.5)};
  } else if (family == "rotation") {
    if (params.size() != 2)
      throw input_error("rotation needs a rational angle p/q");
    const double p_num = params[0], q_den = params[1];
    if (q_den < 1.0 || std::floor(p_num) != p_num || std::floor(q_den) != q_den)
      throw input_error("rotation angle must be a fraction of integers p/q");
    const double r = p_num / q_den;
    f.forward = [r](const Point& p) { return pt(wrap_unit(p[0] + r)); };
    f.inverse = [r](const Point& p) { return pt(wrap_unit(p[0] - r)); };
    f.label = "rotation:" + std::to_string(static_cast<long>(p_num)) + "/" +
              std::to_string(static_cast<long>(q_den));
    f.all_nonwandering = true;  // every point is q-periodic
  } else {
    throw input_error("unknown circle map family '" + family + "'");
  }
  check_declared_fixed(f);
  if (family == "northsouth") {
    // no other fixed point at sample scale
    for (int i = 1; i < 4096; ++i) {
      const double x = i / 4096.0;
      if (circle_arc(x, 0.0) < 1e-6 || circle_arc(x, 0.5) < 1e-6) continue;
      if (circle_arc(f.forward(pt(x))[0], x) <= kFixedTol)
        throw invariant_error("northsouth map has an undeclared fixed point");
    }
  }
  return f;
}

MapSystem make_map(const std::string& spec) {
  std::string family = spec;
  std::string arg;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    family = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  std::vector<double> params;
  if (!arg.empty()) {
    if (const auto slash = arg.find('/'); slash != std::string::npos) {
      params.push_back(std::stod(arg.substr(0, slash)));
      params.push_back(std::stod(arg.substr(slash + 1)));
    } else {
      params.push_back(std::stod(arg));
    }
  }
  if (family == "identity" || family == "square" || family == "sqrt" ||
      family == "threefix")
    return make_interval_map(family, params);
  if (family == "circle-identity")
    return make_circle_map("identity", params);
  if (family == "northsouth" || family == "rotation")
    return make_circle_map(family, params);
  throw input_error("unknown map spec '" + spec + "'");
}

MapSystem make_power(const MapSystem& f, int k) {
  if (k < 1) throw input_error("power k must be >= 1");
  MapSystem g;
  g.space = f.space;
  g.label = f.label + "^" + std::to_string(k);
  g.all_nonwandering = f.all_nonwandering;
  auto fwd = f.forward;
  auto inv = f.inverse;
  g.forward = [fwd, k](const Point& p) {
    Point x = p;
    for (int i = 0; i < k; ++i) x = fwd(x);
    return x;
  };
  g.inverse = [inv, k](const Point& p) {
    Point x = p;
    for (int i = 0; i < k; ++i) x = inv(x);
    return x;
  };
  g.declared_fixed = f.declared_fixed;
  check_declared_fixed(g);
  return g;
}

MapSystem make_product(const MapSystem& f, const MapSystem& g) {
  MapSystem h;
  h.space = Space::product({f.space, g.space});
  h.label = f.label + "x" + g.label;
  h.all_nonwandering = f.all_nonwandering && g.all_nonwandering;
  const int df = f.space.dimension();
  const int dg = g.space.dimension();
  auto ffwd = f.forward, gfwd = g.forward;
  auto finv = f.inverse, ginv = g.inverse;
  auto split_apply = [df, dg](const std::function<Point(const Point&)>& a,
                              const std::function<Point(const Point&)>& b,
                              const Point& p) {
    Point x(p.begin(), p.begin() + df);
    Point y(p.begin() + df, p.begin() + df + dg);
    Point xa = a(x), yb = b(y);
    Point out;
    out.reserve(df + dg);
    out.insert(out.end(), xa.begin(), xa.end());
    out.insert(out.end(), yb.begin(), yb.end());
    return out;
  };
  h.forward = [=](const Point& p) { return split_apply(ffwd, gfwd, p); };
  h.inverse = [=](const Point& p) { return split_apply(finv, ginv, p); };
  for (const auto& a : f.declared_fixed)
    for (const auto& b : g.declared_fixed) {
      Point q;
      q.reserve(a.size() + b.size());
      q.insert(q.end(), a.begin(), a.end());
      q.insert(q.end(), b.begin(), b.end());
      h.declared_fixed.push_back(std::move(q));
    }
  std::sort(h.declared_fixed.begin(), h.declared_fixed.end(), point_less);
  check_declared_fixed(h);
  return h;
}

MapSystem make_conjugate(std::function<Point(const Point&)> h,
                         std::function<Point(const Point&)> h_inv,
                         const MapSystem& f, const std::string& label) {
  MapSystem g;
  g.space = f.space;
  g.label = label + "(" + f.label + ")";
  g.all_nonwandering = f.all_nonwandering;
  {
    MapSystem probe;
    probe.space = f.space;
    probe.forward = h;
    probe.inverse = h_inv;
    probe.label = label;
    check_roundtrip(probe, 1000, kFixedTol, "conjugating map");
  }
  auto fwd = f.forward, inv = f.inverse;
  g.forward = [h, h_inv, fwd](const Point& p) { return h(fwd(h_inv(p))); };
  g.inverse = [h, h_inv, inv](const Point& p) { return h(inv(h_inv(p))); };
  for (const auto& p : f.declared_fixed) g.declared_fixed.push_back(h(p));
  std::sort(g.declared_fixed.begin(), g.declared_fixed.end(), point_less);
  check_declared_fixed(g);
  return g;
}

OrbitTable iterate_orbit(const MapSystem& f, const Point& x0, int horizon) {
  if (horizon < 1) throw input_error("orbit horizon must be >= 1");
  OrbitTable t;
  t.start = x0;
  t.horizon = horizon;
  t.states.reserve(horizon);
  Point x = x0;
  for (int k = 0; k < horizon; ++k) {
    t.states.push_back(x);
    if (k + 1 < horizon) x = f.forward(x);
  }
  return t;
}

namespace {

// Greedy clustering of an orbit tail; centers are running means.
std::vector<Point> cluster_tail(const Space& space,
                                std::span<const Point> tail, double tol) {
  std::vector<Point> centers;
  std::vector<long> sizes;
  for (const auto& p : tail) {
    bool placed = false;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      if (space.distance(centers[c], p) <= tol) {
        // circle means are taken chordally in the stored chart; tails this
        // tight never straddle the wrap seam by more than tol
        for (std::size_t d = 0; d < centers[c].size(); ++d)
          centers[c][d] =
              (centers[c][d] * sizes[c] + p[d]) / (sizes[c] + 1);
        ++sizes[c];
        placed = true;
        break;
      }
    }
    if (!placed) {
      centers.push_back(p);
      sizes.push_back(1);
    }
  }
  std::sort(centers.begin(), centers.end(), point_less);
  return centers;
}

bool tail_recurrent(const Space& space, std::span<const Point> tail,
                    std::size_t period_bound, double tol) {
  if (tail.size() < 2) return true;
  const Point& last = tail.back();
  const std::size_t lim = std::min(period_bound + 1, tail.size() - 1);
  for (std::size_t p = 1; p <= lim; ++p)
    if (space.distance(last, tail[tail.size() - 1 - p]) <= tol) return true;
  return false;
}

}  // namespace

LimitSetReport limit_sets(const MapSystem& f, const Point& x0, int burn,
                          int horizon, double cluster_tol) {
  if (!(horizon > burn && burn >= 0))
    throw input_error("limit_sets needs horizon > burn >= 0");
  LimitSetReport r;
  r.point = x0;

  auto tail_of = [&](const std::function<Point(const Point&)>& step) {
    std::vector<Point> tail;
    Point x = x0;
    for (int k = 0; k < horizon; ++k) {
      if (k >= burn) tail.push_back(x);
      x = step(x);
    }
    return tail;
  };

  const auto fwd_tail = tail_of(f.forward);
  const auto bwd_tail = tail_of(f.inverse);
  r.omega = cluster_tail(f.space, fwd_tail, cluster_tol);
  r.alpha = cluster_tail(f.space, bwd_tail, cluster_tol);
  r.converged =
      tail_recurrent(f.space, fwd_tail, r.omega.size(), cluster_tol) &&
      tail_recurrent(f.space, bwd_tail, r.alpha.size(), cluster_tol);
  return r;
}

std::vector<Point> channel_seeds(const MapSystem& f) {
  if (f.all_nonwandering || f.declared_fixed.empty()) return {};
  if (f.space.dimension() != 1) return {};  // products seed per factor
  std::vector<double> fixed;
  for (const auto& p : f.declared_fixed) fixed.push_back(p[0]);
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  std::vector<Point> seeds;
  if (f.space.kind() == SpaceKind::Interval) {
    if (fixed.empty() || fixed.front() > 0.0) fixed.insert(fixed.begin(), 0.0);
    if (fixed.back() < 1.0) fixed.push_back(1.0);
    for (std::size_t i = 1; i < fixed.size(); ++i)
      if (fixed[i] - fixed[i - 1] > 1e-9)
        seeds.push_back(pt(0.5 * (fixed[i] + fixed[i - 1])));
  } else {
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      const double a = fixed[i];
      const double b = i + 1 < fixed.size() ? fixed[i + 1] : fixed[0] + 1.0;
      if (b - a > 1e-9) seeds.push_back(pt(wrap_unit(0.5 * (a + b))));
    }
  }
  return seeds;
}

}  // namespace polyent
