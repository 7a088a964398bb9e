#pragma once

#include <span>
#include <utility>

namespace polyent {

struct SlopeFit {
  double slope = 0.0;
  double residual = 0.0;  // RMS of log-log fit residuals
  int n_lo = 0;           // first and last depth actually used by the fit
  int n_hi = 0;
  int points_used = 0;
};

/// Least-squares slope of log(count) against log(n) over the top `window`
/// fraction of the census. A trailing run of constant counts is first
/// censored to its first entry: counts that have stopped growing carry no
/// exponent information (finite clouds always plateau eventually). If fewer
/// than three growing points remain the census is flat and the slope is 0.
/// The raw census needs at least three entries with counts >= 1.
SlopeFit slope_fit(std::span<const std::pair<int, long>> census, double window);

}  // namespace polyent
