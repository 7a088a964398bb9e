#include "polyent/estimator.hpp"

#include <atomic>
#include <thread>

#include "polyent/errors.hpp"

namespace polyent {

EstimateResult estimate_hpol(const OrbitCache& cache,
                             const StateGeometry& geom,
                             const std::vector<double>& eps_list,
                             const std::vector<int>& n_list, double window,
                             int jobs) {
  if (eps_list.empty()) throw input_error("eps_list must be nonempty");
  if (n_list.empty()) throw input_error("n_list must be nonempty");
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i - 1]))
      throw input_error("eps_list must be strictly decreasing");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw input_error("n_list must be strictly increasing");
  if (n_list.back() > cache.depth())
    throw input_error("n_list exceeds the cached orbit depth");
  if (jobs < 1) jobs = 1;

  EstimateResult out;
  out.records.resize(eps_list.size() * n_list.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t r = next.fetch_add(1);
      if (r >= out.records.size()) break;
      const double eps = eps_list[r / n_list.size()];
      const int n = n_list[r % n_list.size()];
      CountRecord& rec = out.records[r];
      rec.epsilon = eps;
      rec.time_depth = n;
      rec.separated = greedy_separated(cache, geom, n, eps);
      // the first-fit cover is the same net (see packing.cpp); skip the rescan
      rec.covering = rec.separated;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t e = 0; e < eps_list.size(); ++e) {
    std::vector<std::pair<int, long>> census;
    census.reserve(n_list.size());
    for (std::size_t i = 0; i < n_list.size(); ++i)
      census.emplace_back(n_list[i],
                          out.records[e * n_list.size() + i].separated);
    SlopeRow row;
    row.epsilon = eps_list[e];
    row.fit = slope_fit(census, window);
    out.table.rows.push_back(row);
  }
  out.table.headline = out.table.rows.back().fit.slope;
  return out;
}

}  // namespace polyent
