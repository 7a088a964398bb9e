#pragma once

#include <vector>

#include "polyent/packing.hpp"
#include "polyent/slope.hpp"

namespace polyent {

struct SlopeRow {
  double epsilon = 0.0;
  SlopeFit fit;
};

struct SlopeTable {
  std::vector<SlopeRow> rows;  // one per epsilon, in eps_list order
  double headline = 0.0;       // slope at the smallest epsilon
};

struct EstimateResult {
  std::vector<CountRecord> records;  // eps-major, n-minor
  SlopeTable table;
};

/// Polynomial-entropy estimate: separated/covering counts on the cached
/// orbits for every (eps, n) pair, then a log-log slope per epsilon.
/// eps_list must be strictly decreasing, n_list strictly increasing.
/// Records are independent and computed on `jobs` threads; results are
/// bit-identical for any job count.
EstimateResult estimate_hpol(const OrbitCache& cache, const StateGeometry& geom,
                             const std::vector<double>& eps_list,
                             const std::vector<int>& n_list, double window,
                             int jobs = 1);

}  // namespace polyent
