#include "polyent/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polyent/cloud.hpp"
#include "polyent/csv.hpp"
#include "polyent/dyn_system.hpp"
#include "polyent/errors.hpp"

namespace polyent {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Base: return "base";
    case Mode::Power: return "power";
    case Mode::Product: return "product";
    case Mode::Fn: return "fn";
    case Mode::Susp: return "susp";
    case Mode::DistinctTuples: return "distinct-tuples";
    case Mode::Coding: return "coding";
  }
  return "?";
}

Mode parse_mode(const std::string& name) {
  if (name == "base") return Mode::Base;
  if (name == "power") return Mode::Power;
  if (name == "product") return Mode::Product;
  if (name == "fn") return Mode::Fn;
  if (name == "susp") return Mode::Susp;
  if (name == "distinct-tuples" || name == "tuples")
    return Mode::DistinctTuples;
  if (name == "coding") return Mode::Coding;
  throw input_error("mode: unknown value '" + name + "'");
}

std::vector<double> parse_real_list(const std::string& text,
                                    const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      if (const auto slash = tok.find('/'); slash != std::string::npos)
        out.push_back(std::stod(tok.substr(0, slash)) /
                      std::stod(tok.substr(slash + 1)));
      else
        out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw input_error(field + ": cannot parse real '" + tok + "'");
    }
  }
  if (out.empty()) throw input_error(field + ": empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text,
                                const std::string& field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw input_error(field + ": cannot parse integer '" + tok + "'");
    }
  }
  if (out.empty()) throw input_error(field + ": empty list");
  return out;
}

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  try {
    if (key == "system") cfg.system = value;
    else if (key == "mode") cfg.mode = parse_mode(value);
    else if (key == "nfold") cfg.nfold = std::stoi(value);
    else if (key == "m") cfg.m = std::stoi(value);
    else if (key == "mesh") cfg.mesh = parse_real_list(value, "mesh").at(0);
    else if (key == "count") cfg.count = std::stoi(value);
    else if (key == "eps") cfg.eps_list = parse_real_list(value, "eps");
    else if (key == "nlist") cfg.n_list = parse_int_list(value, "nlist");
    else if (key == "nmax") cfg.nmax = std::stoi(value);
    else if (key == "window") cfg.window = std::stod(value);
    else if (key == "out") cfg.out = value;
    else if (key == "jobs") cfg.jobs = std::stoi(value);
    else if (key == "cap") cfg.cap = std::stoull(value);
    else if (key == "cloud") cfg.cloud = value;
    else if (key == "seed") cfg.seed = std::stoul(value);
    else throw input_error("unknown config key '" + key + "'");
  } catch (const input_error&) {
    throw;
  } catch (const std::exception&) {
    throw input_error(key + ": cannot parse value '" + value + "'");
  }
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open config file '" + path + "'");
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw input_error(path + ":" + std::to_string(lineno) +
                          ": expected 'key = value'");
      continue;
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  if (!(cfg.mesh > 0.0)) throw input_error("mesh: must be positive");
  if (cfg.count < 0) throw input_error("count: must be >= 0");
  if (!(cfg.window > 0.0 && cfg.window <= 1.0))
    throw input_error("window: must lie in (0,1]");
  if (cfg.jobs < 1) throw input_error("jobs: must be >= 1");
  if (cfg.cloud != "saturated" && cfg.cloud != "uniform")
    throw input_error("cloud: must be 'saturated' or 'uniform'");
  switch (cfg.mode) {
    case Mode::Power:
      if (cfg.nfold < 1) throw input_error("nfold: power mode needs k >= 1");
      break;
    case Mode::Fn:
    case Mode::DistinctTuples:
      if (cfg.nfold < 2)
        throw input_error("nfold: " + mode_name(cfg.mode) +
                          " mode needs n >= 2");
      break;
    case Mode::Susp:
      if (!(cfg.nfold > cfg.m && cfg.m >= 1))
        throw input_error("nfold/m: susp mode needs n > m >= 1");
      break;
    default:
      break;
  }
  if (!cfg.n_list.empty()) {
    for (std::size_t i = 1; i < cfg.n_list.size(); ++i)
      if (cfg.n_list[i] <= cfg.n_list[i - 1])
        throw input_error("nlist: must be strictly increasing");
    if (cfg.n_list.size() < 3)
      throw input_error("nlist: needs at least 3 depths");
  } else if (cfg.nmax < 16) {
    throw input_error("nmax: must be >= 16 (the default depth list needs "
                      "three points)");
  }
  if (!cfg.eps_list.empty())
    for (std::size_t i = 1; i < cfg.eps_list.size(); ++i)
      if (!(cfg.eps_list[i] < cfg.eps_list[i - 1]))
        throw input_error("eps: must be strictly decreasing");
}

unsigned long long effective_cap(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv("POLYENT_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw input_error("POLYENT_CAP: cannot parse '" + std::string(env) +
                        "'");
    }
  }
  return cfg.cap;
}

namespace {

std::vector<int> default_n_list(int nmax) {
  std::vector<int> ns;
  for (int n = 4; n <= nmax; n *= 2) ns.push_back(n);
  return ns;
}

std::vector<double> default_eps_list(double mesh, double diameter) {
  std::vector<double> eps;
  for (const double mult : {16.0, 8.0, 4.0, 2.0}) {
    const double e = mesh * mult;
    if (e < diameter) eps.push_back(e);
  }
  if (eps.empty()) eps.push_back(diameter / 2.0);
  return eps;
}

CodingFamily default_family(const MapSystem& f) {
  if (f.all_nonwandering) return CodingFamily(f, {});
  if (f.space.dimension() == 1)
    return CodingFamily(f, {band_letter("K", 0.2, 0.3)});
  // product systems: one band per factor coordinate
  std::vector<CodingLetter> letters;
  const auto kinds = f.space.coordinate_kinds();
  for (std::size_t c = 0; c < kinds.size(); ++c)
    letters.push_back(
        band_letter("K" + std::to_string(c), 0.2, 0.3, static_cast<int>(c)));
  return CodingFamily(f, letters);
}

// Grid starts plus the backward orbit of the letter anchor: passage times
// into the letter then take every value up to the depth budget.
std::vector<Point> coding_starts(const MapSystem& f, const SampleGrid& grid,
                                 int depth) {
  std::vector<Point> starts = grid.points;
  if (!f.all_nonwandering) {
    Point anchor(f.space.dimension(), 0.25);
    Point x = anchor;
    for (int j = 0; j < depth; ++j) {
      x = f.inverse(x);
      starts.push_back(x);
    }
  }
  std::sort(starts.begin(), starts.end(), point_less);
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

ResultRow base_row(const ExperimentConfig& cfg) {
  ResultRow r;
  r.system = cfg.system;
  r.mode = mode_name(cfg.mode);
  switch (cfg.mode) {
    case Mode::Fn:
    case Mode::DistinctTuples:
    case Mode::Power:
      r.n_fold = cfg.nfold;
      break;
    case Mode::Susp:
      r.n_fold = cfg.nfold;
      r.m = cfg.m;
      break;
    case Mode::Product:
      r.n_fold = 2;
      break;
    default:
      break;
  }
  return r;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const MapSystem map = make_map(cfg.system);
  const unsigned long long cap = effective_cap(cfg);

  std::vector<int> n_list = cfg.n_list.empty() ? default_n_list(cfg.nmax)
                                               : cfg.n_list;
  const int depth = n_list.back();

  // the base point cloud every mode builds on
  const MapSystem cloud_map =
      cfg.mode == Mode::Power ? make_power(map, cfg.nfold) : map;
  SampleGrid grid;
  if (cfg.count > 0) {
    grid = ladder_cloud(cloud_map, cfg.count);
  } else {
    grid = build_grid(map.space, cfg.mesh);
    if (cfg.cloud == "saturated")
      grid = saturate_grid(cloud_map, grid, depth);
  }

  ExperimentOutcome out;

  if (cfg.mode == Mode::Coding) {
    const CodingFamily family = default_family(map);
    const auto starts = coding_starts(map, grid, depth);
    out.census = word_census(map, starts, n_list, family, cfg.window);
    out.headline = out.census->slope.slope;
    out.cloud_description = map.label + " coding with " +
                            std::to_string(family.letters().size()) +
                            " letters on " + std::to_string(starts.size()) +
                            " starts";
    for (const auto& [n, words] : out.census->counts) {
      ResultRow r = base_row(cfg);
      r.time_depth = n;
      r.separated = words;
      out.rows.push_back(r);
    }
    ResultRow s = base_row(cfg);
    s.slope = out.census->slope.slope;
    s.residual = out.census->slope.residual;
    s.has_slope = true;
    out.rows.push_back(s);
  } else {
    StateCloud sc;
    switch (cfg.mode) {
      case Mode::Base:
        sc = make_base_cloud(map, grid, depth);
        break;
      case Mode::Power:
        sc = make_base_cloud(cloud_map, grid, depth);
        break;
      case Mode::Product:
        sc = make_product_cloud(map, map, grid, grid, depth);
        break;
      case Mode::Fn:
        sc = make_hyper_cloud(map, grid, cfg.nfold, depth, cap);
        break;
      case Mode::Susp:
        sc = make_susp_cloud(map, grid, cfg.nfold, cfg.m, depth, cap);
        break;
      case Mode::DistinctTuples:
        sc = make_tuple_cloud(map, grid, cfg.nfold, depth);
        break;
      case Mode::Coding:
        break;  // handled above
    }
    const std::vector<double> eps_list =
        cfg.eps_list.empty() ? default_eps_list(grid.mesh, map.space.diameter())
                             : cfg.eps_list;
    out.estimate =
        estimate_hpol(sc.cache, sc.geom, eps_list, n_list, cfg.window,
                      cfg.jobs);
    out.headline = out.estimate.table.headline;
    out.cloud_description = sc.description;

    for (std::size_t e = 0; e < eps_list.size(); ++e) {
      for (std::size_t i = 0; i < n_list.size(); ++i) {
        const auto& rec = out.estimate.records[e * n_list.size() + i];
        ResultRow r = base_row(cfg);
        r.epsilon = rec.epsilon;
        r.time_depth = rec.time_depth;
        r.separated = rec.separated;
        r.covering = rec.covering;
        out.rows.push_back(r);
      }
      const auto& row = out.estimate.table.rows[e];
      ResultRow s = base_row(cfg);
      s.epsilon = row.epsilon;
      s.slope = row.fit.slope;
      s.residual = row.fit.residual;
      s.has_slope = true;
      out.rows.push_back(s);
    }
  }

  if (!cfg.out.empty()) write_csv_file(cfg.out, out.rows);
  return out;
}

}  // namespace polyent
