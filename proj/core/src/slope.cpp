#include "polyent/slope.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polyent/errors.hpp"

namespace polyent {

SlopeFit slope_fit(std::span<const std::pair<int, long>> census,
                   double window) {
  if (census.size() < 3)
    throw input_error("slope_fit needs at least 3 census points");
  if (!(window > 0.0 && window <= 1.0))
    throw input_error("slope window must lie in (0,1]");
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (census[i].second < 1)
      throw input_error("slope_fit counts must be >= 1");
    if (i && census[i].first <= census[i - 1].first)
      throw input_error("slope_fit depths must be strictly increasing");
  }

  // censor the trailing plateau: a count that stopped changing carries no
  // growth information (finite clouds always saturate eventually). Once a
  // plateau is detected, the last growing record is polluted too: growth
  // died somewhere inside its window, at an unknowable depth, so its local
  // slope is biased low by up to the full inter-grid factor.
  std::vector<std::pair<int, long>> pts(census.begin(), census.end());
  const bool saturated =
      pts.size() >= 2 && pts[pts.size() - 1].second == pts[pts.size() - 2].second;
  while (pts.size() >= 2 &&
         pts[pts.size() - 1].second == pts[pts.size() - 2].second)
    pts.pop_back();
  if (saturated && !pts.empty()) pts.pop_back();

  SlopeFit fit;
  if (pts.size() < 3) {
    // census never grew: constant counts mean exponent zero
    fit.slope = 0.0;
    fit.residual = 0.0;
    fit.n_lo = census.front().first;
    fit.n_hi = census.back().first;
    fit.points_used = static_cast<int>(pts.size());
    return fit;
  }

  const auto take =
      std::max<std::size_t>(3, static_cast<std::size_t>(
                                   std::llround(window * pts.size())));
  const std::size_t first = pts.size() > take ? pts.size() - take : 0;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const std::size_t n = pts.size() - first;
  for (std::size_t i = first; i < pts.size(); ++i) {
    const double x = std::log(static_cast<double>(pts[i].first));
    const double y = std::log(static_cast<double>(pts[i].second));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  fit.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  const double intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = first; i < pts.size(); ++i) {
    const double x = std::log(static_cast<double>(pts[i].first));
    const double y = std::log(static_cast<double>(pts[i].second));
    const double r = y - (fit.slope * x + intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.n_lo = pts[first].first;
  fit.n_hi = pts.back().first;
  fit.points_used = static_cast<int>(n);
  return fit;
}

}  // namespace polyent
