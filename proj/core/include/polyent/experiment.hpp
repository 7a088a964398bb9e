#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyent/coding.hpp"
#include "polyent/estimator.hpp"
#include "polyent/finset.hpp"

namespace polyent {

enum class Mode { Base, Power, Product, Fn, Susp, DistinctTuples, Coding };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

struct ExperimentConfig {
  std::string system = "square";
  Mode mode = Mode::Base;
  int nfold = 2;   // fn/susp/distinct-tuples order; iterate count in power mode
  int m = 1;       // collapsed cardinality in susp mode
  double mesh = 1.0 / 512;  // backbone mesh when count == 0
  int count = 0;            // > 0: budgeted ladder cloud of exactly count points
  std::vector<double> eps_list;  // empty: mesh * {16, 8, 4, 2}, clipped
  std::vector<int> n_list;       // empty: powers of two 4..nmax
  int nmax = 512;
  double window = 0.5;
  std::string out;  // CSV path; empty = no file
  int jobs = 1;
  unsigned long long cap = kDefaultHyperCap;  // POLYENT_CAP overrides
  std::string cloud = "saturated";            // saturated | uniform
  unsigned long seed = 12345;                 // probe sampling in verify
};

/// One CSV row: a count record (time_depth > 0) or a per-epsilon summary
/// (time_depth == 0, slope/residual filled).
struct ResultRow {
  std::string system;
  std::string mode;
  int n_fold = 0;
  int m = 0;
  double epsilon = 0.0;
  int time_depth = 0;
  long separated = -1;  // -1 emits an empty field
  long covering = -1;
  double slope = 0.0;
  double residual = 0.0;
  bool has_slope = false;

  bool operator==(const ResultRow&) const = default;
};

struct ExperimentOutcome {
  std::vector<ResultRow> rows;
  double headline = 0.0;
  EstimateResult estimate;          // separated/covering modes
  std::optional<WordCensus> census; // coding mode
  std::string cloud_description;
};

void validate_config(const ExperimentConfig& cfg);

/// Runs one experiment: builds the state cloud for the mode, estimates, and
/// writes the CSV when an output path is set. Deterministic for a fixed
/// config, including under jobs > 1.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Flat key-value config file: `key = value`, '#' comments.
ExperimentConfig parse_config_file(const std::string& path);

/// Applies one key/value pair (config key or CLI flag name) to a config.
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

std::vector<double> parse_real_list(const std::string& text,
                                    const std::string& field);
std::vector<int> parse_int_list(const std::string& text,
                                const std::string& field);

/// Effective enumeration cap: cfg.cap unless POLYENT_CAP is set.
unsigned long long effective_cap(const ExperimentConfig& cfg);

}  // namespace polyent
