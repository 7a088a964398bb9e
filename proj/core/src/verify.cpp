#include "polyent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "polyent/cloud.hpp"
#include "polyent/coding.hpp"
#include "polyent/errors.hpp"
#include "polyent/experiment.hpp"
#include "polyent/suspension.hpp"

namespace polyent {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(4);
  ss << x;
  return ss.str();
}

struct Ctx {
  int jobs = 1;
  unsigned long long cap = kDefaultHyperCap;
};

void add_check(std::vector<CheckResult>& out, const std::string& name,
               bool pass, const std::string& detail, Clock::time_point t0) {
  out.push_back({name, pass, detail, seconds_since(t0)});
}

bool in_band(double x, double lo, double hi) { return x >= lo && x <= hi; }

// absolute guard for float triangle inequalities on unit-scale values
constexpr double kUlpGuard = 1e-12;

// ---------------------------------------------------------------------------
// pinned experiment configurations for the slope criteria
// ---------------------------------------------------------------------------

ExperimentConfig theorem_cfg(const Ctx& ctx) {
  ExperimentConfig cfg;
  cfg.jobs = ctx.jobs;
  cfg.cap = ctx.cap;
  return cfg;
}

ExperimentConfig c1_interval_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = theorem_cfg(ctx);
  cfg.system = "square";
  cfg.mode = Mode::Base;
  cfg.mesh = 1.0 / 512;
  cfg.eps_list = {1.0 / 32, 1.0 / 64, 1.0 / 128};
  cfg.n_list = {4, 8, 16, 32, 64, 128, 256, 512};
  return cfg;
}

ExperimentConfig c1_circle_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = c1_interval_cfg(ctx);
  cfg.system = "northsouth:0.5";
  return cfg;
}

ExperimentConfig c2_fn_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = theorem_cfg(ctx);
  cfg.system = "square";
  cfg.mode = Mode::Fn;
  cfg.nfold = 2;
  cfg.count = 64;
  cfg.eps_list = {0.4, 0.2};
  cfg.n_list = {3, 4, 6, 8, 12, 16, 24, 32, 40};
  return cfg;
}

ExperimentConfig c2_susp_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = c2_fn_cfg(ctx);
  cfg.mode = Mode::Susp;
  cfg.m = 1;
  return cfg;
}

ExperimentConfig c3_fn_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = theorem_cfg(ctx);
  cfg.system = "square";
  cfg.mode = Mode::Fn;
  cfg.nfold = 3;
  cfg.count = 32;
  cfg.eps_list = {0.5, 0.25};
  cfg.n_list = {2, 3, 4, 6, 8, 12, 16};
  return cfg;
}

ExperimentConfig c4_susp_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = c3_fn_cfg(ctx);
  cfg.mode = Mode::Susp;
  cfg.m = 2;
  return cfg;
}

ExperimentConfig c5_tuples_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = c2_fn_cfg(ctx);
  cfg.mode = Mode::DistinctTuples;
  return cfg;
}

ExperimentConfig c5_base_cfg(const Ctx& ctx) {
  ExperimentConfig cfg = c2_fn_cfg(ctx);
  cfg.mode = Mode::Base;
  return cfg;
}

// ---------------------------------------------------------------------------
// metrics suite (criterion 9: exact structural checks)
// ---------------------------------------------------------------------------

Point random_point(const Space& space, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Point p(space.dimension());
  for (auto& c : p) c = uni(rng);
  if (space.kind() == SpaceKind::Circle) p[0] = wrap_unit(p[0]);
  return p;
}

bool metric_axioms_ok(const Space& space, int triples, std::mt19937_64& rng,
                      std::string& fail) {
  for (int t = 0; t < triples; ++t) {
    const Point x = random_point(space, rng);
    const Point y = random_point(space, rng);
    const Point z = random_point(space, rng);
    const double dxy = space.distance(x, y);
    const double dyx = space.distance(y, x);
    const double dxz = space.distance(x, z);
    const double dyz = space.distance(y, z);
    if (space.distance(x, x) != 0.0) { fail = "d(x,x) != 0"; return false; }
    if (dxy != dyx) { fail = "asymmetric"; return false; }
    if (x != y && dxy <= 0.0) { fail = "zero for distinct points"; return false; }
    if (dxz > dxy + dyz + kUlpGuard) { fail = "triangle violated"; return false; }
  }
  return true;
}

FinSet random_finset(const Space& space, int n_bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> card(1, n_bound);
  const int k = card(rng);
  std::vector<Point> pts;
  pts.reserve(k);
  for (int i = 0; i < k; ++i) pts.push_back(random_point(space, rng));
  return FinSet(std::move(pts), n_bound);
}

void check_metric_axioms(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  std::string fail;
  bool ok = true;
  for (const Space& s : {Space::interval(), Space::circle(),
                         Space::product({Space::interval(), Space::circle()})})
    ok = ok && metric_axioms_ok(s, 10000, rng, fail);

  // Hausdorff axioms
  const Space interval = Space::interval();
  for (int t = 0; ok && t < 10000; ++t) {
    const FinSet a = random_finset(interval, 3, rng);
    const FinSet b = random_finset(interval, 3, rng);
    const FinSet c = random_finset(interval, 3, rng);
    const double dab = hausdorff_distance(interval, a, b);
    if (dab != hausdorff_distance(interval, b, a)) { ok = false; fail = "dH asymmetric"; }
    if (hausdorff_distance(interval, a, a) != 0.0) { ok = false; fail = "dH(a,a) != 0"; }
    if (a != b && dab <= 0.0) { ok = false; fail = "dH zero for distinct sets"; }
    if (dab > hausdorff_distance(interval, a, c) +
                  hausdorff_distance(interval, c, b) + kUlpGuard) {
      ok = false;
      fail = "dH triangle violated";
    }
  }

  // collapse metric axioms on SF_3^1
  for (int t = 0; ok && t < 10000; ++t) {
    auto random_susp = [&](std::mt19937_64& r) {
      std::uniform_int_distribution<int> coin(0, 5);
      if (coin(r) == 0) return SuspPoint::collapsed(3, 1);
      std::uniform_int_distribution<int> card(2, 3);
      const int k = card(r);
      std::vector<Point> pts;
      for (int i = 0; i < k; ++i) pts.push_back(random_point(interval, r));
      return quotient_q(FinSet(std::move(pts), 3), 1);
    };
    const SuspPoint p = random_susp(rng), q = random_susp(rng),
                    r = random_susp(rng);
    const double dpq = susp_distance(interval, p, q);
    if (dpq != susp_distance(interval, q, p)) { ok = false; fail = "dq asymmetric"; }
    if (susp_distance(interval, p, p) != 0.0) { ok = false; fail = "dq(p,p) != 0"; }
    if (p != q && dpq <= 0.0) { ok = false; fail = "dq zero for distinct points"; }
    if (dpq > susp_distance(interval, p, r) + susp_distance(interval, r, q) +
                  kUlpGuard) {
      ok = false;
      fail = "dq triangle violated";
    }
  }
  add_check(out, "C9-metric-axioms", ok,
            ok ? "base/Hausdorff/collapse axioms on 10^4 random triples each"
               : fail,
            t0);
}

void check_semiconjugacy(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(99);
  const SampleGrid g = build_grid(Space::interval(), 1.0 / 128);
  const SampleGrid gc = build_grid(Space::circle(), 1.0 / 128);
  bool ok = true;
  long probes = 0;
  for (const auto& [map, grid] :
       {std::pair<MapSystem, const SampleGrid*>{make_map("square"), &g},
        {make_map("northsouth:0.5"), &gc}}) {
    for (int n = 2; n <= 3 && ok; ++n) {
      std::uniform_int_distribution<std::size_t> pick(0, grid->points.size() - 1);
      for (int t = 0; t < 2500 && ok; ++t, ++probes) {
        std::vector<Point> tuple;
        for (int i = 0; i < n; ++i) tuple.push_back(grid->points[pick(rng)]);
        // pi(f^{xn}(t)) == F_n(f)(pi(t)), exactly
        std::vector<Point> mapped;
        for (const auto& p : tuple) mapped.push_back(map.forward(p));
        const FinSet lhs = project_pi(mapped, n);
        const FinSet rhs = induced_map_F(map, project_pi(tuple, n));
        if (!(lhs == rhs)) ok = false;
        // pi is nonexpansive: dH(pi s, pi t) <= max-metric distance
        std::vector<Point> tuple2;
        for (int i = 0; i < n; ++i) tuple2.push_back(grid->points[pick(rng)]);
        double dmax = 0.0;
        for (int i = 0; i < n; ++i)
          dmax = std::max(dmax, map.space.distance(tuple[i], tuple2[i]));
        if (hausdorff_distance(map.space, project_pi(tuple, n),
                               project_pi(tuple2, n)) > dmax + kUlpGuard)
          ok = false;
      }
    }
  }
  add_check(out, "C9-semiconjugacy", ok,
            "pi o f^xn == F_n(f) o pi exactly on " + std::to_string(probes) +
                " probes (square, northsouth; n=2,3), pi nonexpansive",
            t0);
}

void check_q_diagram(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(100);
  const SampleGrid g = build_grid(Space::interval(), 1.0 / 128);
  const MapSystem map = make_map("square");
  bool ok = true;
  const int n = 3, m = 1;
  std::uniform_int_distribution<std::size_t> pick(0, g.points.size() - 1);
  std::uniform_int_distribution<int> card(1, n);
  for (int t = 0; t < 10000 && ok; ++t) {
    std::vector<Point> pts;
    const int k = card(rng);
    for (int i = 0; i < k; ++i) pts.push_back(g.points[pick(rng)]);
    const FinSet a(pts, n);
    const SuspPoint lhs = quotient_q(induced_map_F(map, a), m);
    const SuspPoint rhs = induced_map_S(map, quotient_q(a, m));
    if (!(lhs == rhs)) ok = false;
    // q is nonexpansive for random pairs
    std::vector<Point> pts2;
    for (int i = 0; i < card(rng); ++i) pts2.push_back(g.points[pick(rng)]);
    const FinSet b(pts2, n);
    if (susp_distance(map.space, quotient_q(a, m), quotient_q(b, m)) >
        hausdorff_distance(map.space, a, b) + kUlpGuard)
      ok = false;
  }
  add_check(out, "C9-q-diagram", ok,
            "q o F_n(f) == SF_n(f) o q exactly on 10^4 probes, q nonexpansive",
            t0);
}

void check_iterate_identity(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  const SampleGrid g = build_grid(Space::interval(), 1.0 / 16);
  const HyperGrid h = hyper_grid(g, 2);
  const SuspGrid sg = susp_grid(h, 1);
  bool ok = true;
  for (const char* name : {"square", "sqrt", "threefix"}) {
    const MapSystem map = make_map(name);
    for (int k = 2; k <= 3; ++k)
      ok = ok && iterate_identity_check(map, k, sg.members);
  }
  add_check(out, "C9-iterate-identity", ok,
            "(SF_2(f))^k == SF_2(f^k) exactly for k in {2,3} on " +
                std::to_string(sg.members.size()) + " grid classes x 3 maps",
            t0);
}

void check_sandwich(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const MapSystem map = make_map("square");
  const SampleGrid grid = ladder_cloud(map, 64);
  const StateCloud sc = make_base_cloud(map, grid, 32);
  bool ok = true;
  std::string detail;
  for (const double eps : {0.2, 0.1, 0.05}) {
    for (const int n : {1, 4, 8, 16, 32}) {
      const long s2 = greedy_separated(sc.cache, sc.geom, n, 2 * eps);
      const long c1 = greedy_cover(sc.cache, sc.geom, n, eps);
      const long s1 = greedy_separated(sc.cache, sc.geom, n, eps);
      if (!(s2 <= c1 && c1 <= s1)) {
        ok = false;
        detail = "violated at eps=" + fmt(eps) + " n=" + std::to_string(n);
      }
    }
  }
  (void)ctx;
  add_check(out, "C9-sandwich", ok,
            ok ? "S(n,2e) <= C(n,e) <= S(n,e) on 15 (eps,n) records" : detail,
            t0);
}

// exhaustive maximum-separated oracle for small clouds (bitmask search)
long max_separated_exhaustive(const OrbitCache& cache,
                              const StateGeometry& geom, int n, double eps,
                              const std::vector<std::size_t>& idx) {
  const int m = static_cast<int>(idx.size());
  std::vector<unsigned> compat(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j &&
          dyn_distance(cache, geom, idx[i], idx[j], n) >= eps)
        compat[i] |= 1u << j;
  long best = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    bool feasible = true;
    for (int i = 0; i < m && feasible; ++i)
      if (mask & (1u << i))
        if ((mask & ~(compat[i] | (1u << i))) != 0) feasible = false;
    if (feasible) best = std::max<long>(best, __builtin_popcount(mask));
  }
  return best;
}

void check_greedy_oracle(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  const MapSystem map = make_map("square");
  const SampleGrid grid = ladder_cloud(map, 200);
  const StateCloud sc = make_base_cloud(map, grid, 16);
  bool ok = true;
  std::string detail = "greedy within [oracle/2, oracle] on ";
  int cases = 0;
  for (int rep = 0; rep < 20 && ok; ++rep) {
    // random sub-cloud of <= 15 states, preserved canonical order
    std::vector<std::size_t> idx;
    std::uniform_int_distribution<std::size_t> pick(0, sc.cache.count() - 1);
    while (idx.size() < 13) idx.push_back(pick(rng));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    // rebuild a small cache with just these states
    OrbitCache small(idx.size(), sc.cache.depth(), sc.cache.width());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (int k = 0; k < sc.cache.depth(); ++k) {
        auto dst = small.row(i, k);
        const auto src = sc.cache.row(idx[i], k);
        std::copy(src.begin(), src.end(), dst.begin());
      }
    std::vector<std::size_t> all(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) all[i] = i;
    for (const double eps : {0.3, 0.15, 0.05}) {
      for (const int n : {1, 4, 16}) {
        const long greedy = greedy_separated(small, sc.geom, n, eps);
        const long oracle =
            max_separated_exhaustive(small, sc.geom, n, eps, all);
        ++cases;
        if (!(greedy <= oracle && 2 * greedy >= oracle)) {
          ok = false;
          detail = "failed at eps=" + fmt(eps) + " n=" + std::to_string(n) +
                   " greedy=" + std::to_string(greedy) +
                   " oracle=" + std::to_string(oracle);
        }
      }
    }
  }
  add_check(out, "C9-greedy-oracle", ok,
            ok ? detail + std::to_string(cases) + " small clouds" : detail,
            t0);
}

// grid-center brute force for dist_to_Fm: centers restricted to a fine grid
double dist_to_Fm_oracle(const Space& space, const FinSet& a, int m,
                         int grid_n) {
  std::vector<double> centers;
  centers.reserve(grid_n);
  for (int i = 0; i <= grid_n; ++i) {
    if (space.kind() == SpaceKind::Circle && i == grid_n) break;
    centers.push_back(static_cast<double>(i) / grid_n);
  }
  auto dh_to_centers = [&](const std::vector<double>& cs) {
    double out_dir = 0.0;  // sup over A of dist to centers
    for (const auto& p : a.elements()) {
      double best = 1e9;
      for (double c : cs)
        best = std::min(best, space.distance(p, Point{c}));
      out_dir = std::max(out_dir, best);
    }
    double in_dir = 0.0;  // sup over centers of dist to A
    for (double c : cs) {
      double best = 1e9;
      for (const auto& p : a.elements())
        best = std::min(best, space.distance(p, Point{c}));
      in_dir = std::max(in_dir, best);
    }
    return std::max(out_dir, in_dir);
  };
  double best = 1e9;
  if (m == 1) {
    for (double c : centers) best = std::min(best, dh_to_centers({c}));
  } else {
    for (std::size_t i = 0; i < centers.size(); ++i)
      for (std::size_t j = i; j < centers.size(); ++j)
        best = std::min(best, dh_to_centers({centers[i], centers[j]}));
  }
  return best;
}

void check_chebyshev_oracle(std::vector<CheckResult>& out, const Ctx&) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(13);
  bool ok = true;
  std::string detail;
  const int grid_n = 200;
  const double snap = 0.5 / grid_n;  // moving centers to the grid costs <= this
  int cases = 0;
  for (const Space& space : {Space::interval(), Space::circle()}) {
    for (int t = 0; t < 500 && ok; ++t) {
      std::uniform_int_distribution<int> card(2, 4);
      std::uniform_int_distribution<int> mm(1, 2);
      const int k = card(rng);
      std::vector<Point> pts;
      for (int i = 0; i < k; ++i) pts.push_back(random_point(space, rng));
      const FinSet a(std::move(pts), 4);
      const int m = mm(rng);
      const double exact = dist_to_Fm(space, a, m);
      const double oracle = dist_to_Fm_oracle(space, a, m, grid_n);
      ++cases;
      if (!(oracle >= exact - kUlpGuard && oracle <= exact + snap + 1e-9)) {
        ok = false;
        detail = "exact=" + fmt(exact) + " oracle=" + fmt(oracle) +
                 " m=" + std::to_string(m);
      }
    }
  }
  add_check(out, "C9-chebyshev-oracle", ok,
            ok ? "partition search within grid snap of brute force on " +
                     std::to_string(cases) + " random sets"
               : detail,
            t0);
}

// ---------------------------------------------------------------------------
// dynamics suite (criteria 6, 7, 8, 11)
// ---------------------------------------------------------------------------

void check_negative_controls(std::vector<CheckResult>& out, const Ctx& ctx) {
  {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail = "headlines:";
    for (const Mode mode : {Mode::Base, Mode::Power, Mode::Product, Mode::Fn,
                            Mode::Susp, Mode::DistinctTuples}) {
      ExperimentConfig cfg = theorem_cfg(ctx);
      cfg.system = "identity";
      cfg.mode = mode;
      cfg.nfold = 2;
      cfg.m = 1;
      cfg.count = 24;
      cfg.n_list = {4, 8, 16, 32};
      const auto res = run_experiment(cfg);
      detail += " " + mode_name(mode) + "=" + fmt(res.headline);
      if (!(res.headline <= 0.2)) ok = false;
    }
    add_check(out, "C6-identity-controls", ok, detail, t0);
  }
  {
    const auto t0 = Clock::now();
    ExperimentConfig cfg = theorem_cfg(ctx);
    cfg.system = "rotation:1/3";
    cfg.mode = Mode::Base;
    cfg.mesh = 1.0 / 64;
    cfg.eps_list = {0.026, 0.013};  // off the grid-arc values
    cfg.n_list = {4, 8, 16, 32, 64};
    const auto res = run_experiment(cfg);
    bool n_independent = true;
    for (std::size_t e = 0; e < cfg.eps_list.size(); ++e)
      for (std::size_t i = 1; i < cfg.n_list.size(); ++i)
        if (res.estimate.records[e * cfg.n_list.size() + i].separated !=
            res.estimate.records[e * cfg.n_list.size()].separated)
          n_independent = false;
    const bool ok = res.headline <= 0.2 && n_independent;
    add_check(out, "C6-rotation-control", ok,
              "headline=" + fmt(res.headline) +
                  (n_independent ? ", separated counts n-independent"
                                 : ", counts vary with n"),
              t0);
  }
}

void check_property_suite(std::vector<CheckResult>& out, const Ctx& ctx) {
  // power: h(f) vs h(f^2)
  {
    const auto t0 = Clock::now();
    ExperimentConfig base = theorem_cfg(ctx);
    base.system = "square";
    base.mode = Mode::Base;
    base.count = 128;
    base.eps_list = {0.25, 0.125};
    base.n_list = {4, 6, 8, 12, 16, 24, 32, 48, 64};
    const double h1 = run_experiment(base).headline;
    ExperimentConfig pow = base;
    pow.mode = Mode::Power;
    pow.nfold = 2;
    const double h2 = run_experiment(pow).headline;
    const bool ok = std::fabs(h1 - h2) <= 0.3;
    add_check(out, "C7-power", ok,
              "h(f)=" + fmt(h1) + " h(f^2)=" + fmt(h2) + " |diff|<=0.3", t0);
  }
  // product: h(f x f) vs 2 h(f)
  {
    const auto t0 = Clock::now();
    ExperimentConfig base = theorem_cfg(ctx);
    base.system = "square";
    base.mode = Mode::Base;
    base.count = 48;
    base.eps_list = {0.25, 0.125};
    base.n_list = {3, 4, 6, 8, 12, 16, 24, 32};
    const double h1 = run_experiment(base).headline;
    ExperimentConfig prod = base;
    prod.mode = Mode::Product;
    const double hp = run_experiment(prod).headline;
    const bool ok = std::fabs(hp - 2 * h1) <= 0.5;
    add_check(out, "C7-product", ok,
              "h(fxf)=" + fmt(hp) + " 2h(f)=" + fmt(2 * h1) + " |diff|<=0.5",
              t0);
  }
  // conjugacy via h(x) = x^3
  {
    const auto t0 = Clock::now();
    const MapSystem square = make_map("square");
    const MapSystem conj = make_conjugate(
        [](const Point& p) { return Point{p[0] * p[0] * p[0]}; },
        [](const Point& p) { return Point{std::cbrt(p[0])}; }, square, "cube");
    const std::vector<double> eps = {0.25, 0.125};
    const std::vector<int> ns = {4, 6, 8, 12, 16, 24, 32, 48, 64};
    auto headline_of = [&](const MapSystem& f) {
      const SampleGrid grid = ladder_cloud(f, 128);
      const StateCloud sc = make_base_cloud(f, grid, ns.back());
      return estimate_hpol(sc.cache, sc.geom, eps, ns, 0.5, ctx.jobs)
          .table.headline;
    };
    const double h1 = headline_of(square);
    const double h2 = headline_of(conj);
    const bool ok = std::fabs(h1 - h2) <= 0.3;
    add_check(out, "C7-conjugacy", ok,
              "h(f)=" + fmt(h1) + " h(hfh^-1)=" + fmt(h2) + " |diff|<=0.3",
              t0);
  }
  // factor inequalities
  {
    const auto t0 = Clock::now();
    const MapSystem square = make_map("square");
    const SampleGrid grid = ladder_cloud(square, 64);
    const std::vector<double> eps = {0.25, 0.125};
    const std::vector<int> ns = {3, 4, 6, 8, 12, 16, 24, 32};
    const StateCloud full = make_power_tuple_cloud(square, grid, 2, ns.back());
    const double h_full =
        estimate_hpol(full.cache, full.geom, eps, ns, 0.5, ctx.jobs)
            .table.headline;
    const StateCloud hyper =
        make_hyper_cloud(square, grid, 2, ns.back(), ctx.cap);
    const double h_fn =
        estimate_hpol(hyper.cache, hyper.geom, eps, ns, 0.5, ctx.jobs)
            .table.headline;
    const StateCloud susp =
        make_susp_cloud(square, grid, 2, 1, ns.back(), ctx.cap);
    const double h_sf =
        estimate_hpol(susp.cache, susp.geom, eps, ns, 0.5, ctx.jobs)
            .table.headline;
    const bool ok = h_fn <= h_full + 0.3 && h_sf <= h_fn + 0.3;
    add_check(out, "C7-factor-inequalities", ok,
              "h(F_2)=" + fmt(h_fn) + " <= h(f^x2)+0.3=" + fmt(h_full + 0.3) +
                  "; h(SF_2)=" + fmt(h_sf) + " <= h(F_2)+0.3=" +
                  fmt(h_fn + 0.3),
              t0);
  }
}

void check_wandering_bound(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const auto res = run_experiment(c2_susp_cfg(ctx));
  const bool ok = res.headline >= 1.6;
  add_check(out, "C8-wandering-lower-bound", ok,
            "square has wandering points with singleton alpha/omega; "
            "h(SF_2) = " + fmt(res.headline) + " >= 1.6",
            t0);
}

void check_fixed_set_lemma(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const MapSystem map = make_map("square");
  const SampleGrid grid = build_grid(map.space, 1.0 / 8);
  const HyperGrid h = hyper_grid(grid, 2, ctx.cap);
  const SuspGrid sg = susp_grid(h, 1);
  const auto fixed = fixed_points_of_suspension(map, sg, 0.0);
  const FinSet both({Point{0.0}, Point{1.0}}, 2);
  const bool ok = fixed.size() == 2 && fixed[0].is_collapsed() &&
                  !fixed[1].is_collapsed() && fixed[1].class_set() == both;
  const auto fixed_sets = fixed_sets_of_induced(map, h, 0.0);
  const bool ok_sets =
      fixed_sets.size() == 3 &&
      fixed_sets[0] == FinSet({Point{0.0}}, 2) &&
      fixed_sets[1] == FinSet({Point{1.0}}, 2) && fixed_sets[2] == both;
  add_check(out, "C11-fixed-set-lemma", ok && ok_sets,
            "Fix(SF_2(square)) on the grid = {F_X, {0,1}} exactly; "
            "Fix(F_2) = {{0},{1},{0,1}}",
            t0);
}

// ---------------------------------------------------------------------------
// theorem suite (criteria 1-5)
// ---------------------------------------------------------------------------

void check_base_entropy(std::vector<CheckResult>& out, const Ctx& ctx) {
  {
    const auto t0 = Clock::now();
    const auto res = run_experiment(c1_interval_cfg(ctx));
    const double el = seconds_since(t0);
    const bool ok = in_band(res.headline, 0.75, 1.25) && el < 30.0;
    add_check(out, "C1-base-interval", ok,
              "square headline=" + fmt(res.headline) +
                  " in [0.75,1.25], runtime " + fmt(el) + "s < 30s (" +
                  res.cloud_description + ")",
              t0);
  }
  {
    const auto t0 = Clock::now();
    const auto res = run_experiment(c1_circle_cfg(ctx));
    const double el = seconds_since(t0);
    const bool ok = in_band(res.headline, 0.75, 1.25) && el < 30.0;
    add_check(out, "C1-base-circle", ok,
              "northsouth headline=" + fmt(res.headline) +
                  " in [0.75,1.25], runtime " + fmt(el) + "s < 30s",
              t0);
  }
}

void check_main_theorem_n2(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const auto fn = run_experiment(c2_fn_cfg(ctx));
  const auto susp = run_experiment(c2_susp_cfg(ctx));
  const double el = seconds_since(t0);
  const bool ok_fn = in_band(fn.headline, 1.6, 2.4);
  const bool ok_susp = in_band(susp.headline, 1.6, 2.4) &&
                       std::fabs(susp.headline - fn.headline) <= 0.4;
  add_check(out, "C2-theorem-fn2", ok_fn && el < 180.0,
            "h(F_2(square))=" + fmt(fn.headline) + " in [1.6,2.4] (" +
                fn.cloud_description + ")",
            t0);
  add_check(out, "C2-theorem-susp21", ok_susp && el < 180.0,
            "h(SF_2(square))=" + fmt(susp.headline) +
                " in [1.6,2.4], |diff to F_2| = " +
                fmt(std::fabs(susp.headline - fn.headline)) +
                " <= 0.4, joint runtime " + fmt(el) + "s < 180s",
            t0);
}

void check_main_theorem_n3(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const auto fn = run_experiment(c3_fn_cfg(ctx));
  const double el = seconds_since(t0);
  add_check(out, "C3-theorem-fn3", in_band(fn.headline, 2.4, 3.6) && el < 600.0,
            "h(F_3(square))=" + fmt(fn.headline) + " in [2.4,3.6], runtime " +
                fmt(el) + "s < 600s (" + fn.cloud_description + ")",
            t0);
  const auto t1 = Clock::now();
  const auto susp = run_experiment(c4_susp_cfg(ctx));
  add_check(out, "C4-generalized-susp32",
            std::fabs(susp.headline - fn.headline) <= 0.5,
            "h(SF_3^2(square))=" + fmt(susp.headline) + " within 0.5 of " +
                fmt(fn.headline),
            t1);
}

void check_inner_lemma(std::vector<CheckResult>& out, const Ctx& ctx) {
  const auto t0 = Clock::now();
  const auto tuples = run_experiment(c5_tuples_cfg(ctx));
  const auto base = run_experiment(c5_base_cfg(ctx));
  const bool ok = std::fabs(tuples.headline - 2 * base.headline) <= 0.4;
  add_check(out, "C5-inner-lemma-tuples", ok,
            "h(f^x2 on pi^-1(G_2))=" + fmt(tuples.headline) +
                " within 0.4 of 2 x base " + fmt(2 * base.headline) +
                " (same 64-point base cloud)",
            t0);
}

// ---------------------------------------------------------------------------
// coding suite (criterion 10)
// ---------------------------------------------------------------------------

void check_coding(std::vector<CheckResult>& out, const Ctx& ctx) {
  {
    const auto t0 = Clock::now();
    ExperimentConfig cfg = theorem_cfg(ctx);
    cfg.system = "square";
    cfg.mode = Mode::Coding;
    cfg.mesh = 1.0 / 128;
    cfg.cloud = "uniform";  // census starts add their own ladders
    cfg.n_list = {4, 8, 16, 32, 64, 128, 256, 512};
    const auto res = run_experiment(cfg);
    add_check(out, "C10-coding-single-letter",
              in_band(res.headline, 0.75, 1.25),
              "square census slope=" + fmt(res.headline) + " in [0.75,1.25] (" +
                  res.cloud_description + ")",
              t0);
  }
  {
    const auto t0 = Clock::now();
    const MapSystem square = make_map("square");
    const MapSystem prod = make_product(square, square);
    const CodingFamily family(
        prod, {band_letter("Kx", 0.2, 0.3, 0), band_letter("Ky", 0.2, 0.3, 1)});
    // starts: pairs of backward ladders of the letter anchor
    std::vector<double> ladder{0.25};
    {
      Point x{0.25};
      for (int j = 0; j < 96; ++j) {
        x = square.inverse(x);
        ladder.push_back(x[0]);
      }
    }
    std::vector<Point> starts;
    starts.reserve(ladder.size() * ladder.size());
    for (double a : ladder)
      for (double b : ladder) starts.push_back(Point{a, b});
    std::sort(starts.begin(), starts.end(), point_less);
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    const std::vector<int> ns = {4, 8, 16, 32, 64};
    const WordCensus census = word_census(prod, starts, ns, family, 0.5);
    add_check(out, "C10-coding-product",
              in_band(census.slope.slope, 1.5, 2.5),
              "square x square two-letter census slope=" +
                  fmt(census.slope.slope) + " in [1.5,2.5] on " +
                  std::to_string(starts.size()) + " starts",
              t0);
  }
  {
    const auto t0 = Clock::now();
    const MapSystem square = make_map("square");
    const CodingFamily empty(square, {});
    const SampleGrid g = build_grid(square.space, 1.0 / 32);
    const std::vector<int> ns = {4, 8, 16, 32};
    const WordCensus census = word_census(square, g.points, ns, empty, 0.5);
    bool one_word = true;
    for (const auto& [n, c] : census.counts) one_word = one_word && c == 1;
    add_check(out, "C10-coding-empty-family",
              one_word && census.slope.slope == 0.0,
              "empty family: 1 word per depth, slope exactly 0", t0);
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int jobs,
                                   unsigned long long cap) {
  Ctx ctx{jobs, cap};
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (suite == "metrics" || all) {
    check_metric_axioms(out, ctx);
    check_semiconjugacy(out, ctx);
    check_q_diagram(out, ctx);
    check_iterate_identity(out, ctx);
    check_sandwich(out, ctx);
    check_greedy_oracle(out, ctx);
    check_chebyshev_oracle(out, ctx);
  }
  if (suite == "dynamics" || all) {
    check_negative_controls(out, ctx);
    check_property_suite(out, ctx);
    check_wandering_bound(out, ctx);
    check_fixed_set_lemma(out, ctx);
  }
  if (suite == "theorem" || all) {
    check_base_entropy(out, ctx);
    check_main_theorem_n2(out, ctx);
    check_main_theorem_n3(out, ctx);
    check_inner_lemma(out, ctx);
  }
  if (suite == "coding" || all) {
    check_coding(out, ctx);
  }
  if (out.empty())
    throw input_error("unknown suite '" + suite +
                      "' (use metrics, dynamics, theorem, coding, or all)");
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.pass ? "PASS " : "FAIL ";
    out += r.name;
    out += "  ";
    out += r.detail;
    out += "  [";
    out += fmt(r.seconds);
    out += "s]\n";
  }
  return out;
}

}  // namespace polyent
