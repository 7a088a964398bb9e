#include "polyent/cloud.hpp"

#include <algorithm>
#include <set>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    return point_less(a, b);
  }
};

}  // namespace

SampleGrid saturate_grid(const MapSystem& f, const SampleGrid& grid,
                         int max_rounds) {
  if (!f.space.same_as(grid.space))
    throw input_error("saturate_grid: grid and map spaces differ");
  std::set<Point, PointLess> seen(grid.points.begin(), grid.points.end());
  std::vector<Point> frontier = grid.points;
  for (int round = 0; round < max_rounds && !frontier.empty(); ++round) {
    std::vector<Point> next;
    next.reserve(frontier.size());
    for (const auto& p : frontier) {
      Point q = f.inverse(p);
      if (seen.insert(q).second) next.push_back(std::move(q));
    }
    frontier = std::move(next);
  }
  SampleGrid out;
  out.space = grid.space;
  out.mesh = grid.mesh;  // the original grid still covers
  out.points.assign(seen.begin(), seen.end());
  return out;
}

SampleGrid ladder_cloud(const MapSystem& f, int count) {
  if (count < 2) throw input_error("ladder_cloud needs count >= 2");
  const auto seeds = channel_seeds(f);

  // uniform backbone takes about a quarter of the budget; pure orbit data
  // the rest. Without wandering channels the backbone is everything.
  int backbone_pts = seeds.empty() ? count : std::max(5, count / 8);
  backbone_pts = std::min(backbone_pts, count);
  const double mesh =
      f.space.kind() == SpaceKind::Interval
          ? 1.0 / std::max(1, backbone_pts - 1)
          : 1.0 / std::max(1, backbone_pts);
  const SampleGrid backbone = build_grid(f.space, mesh);

  std::set<Point, PointLess> pts(backbone.points.begin(),
                                 backbone.points.end());
  for (const auto& p : f.declared_fixed)
    if (static_cast<int>(pts.size()) < count) pts.insert(p);

  // one backward and one forward chain per channel seed, grown round-robin;
  // a chain retires when its value stops being new (exact repetition)
  struct Chain {
    Point x;
    bool backward;
    bool alive = true;
  };
  std::vector<Chain> chains;
  for (const auto& s : seeds) {
    chains.push_back({s, true});
    chains.push_back({s, false});
  }
  const int stall_limit = 4 * count;
  int round = 0;
  while (static_cast<int>(pts.size()) < count && round++ < stall_limit) {
    bool progressed = false;
    for (auto& c : chains) {
      if (!c.alive || static_cast<int>(pts.size()) >= count) continue;
      c.x = c.backward ? f.inverse(c.x) : f.forward(c.x);
      if (pts.insert(c.x).second)
        progressed = true;
      else
        c.alive = false;
    }
    if (!progressed) break;
  }

  SampleGrid out;
  out.space = f.space;
  out.points.assign(pts.begin(), pts.end());
  out.mesh = covering_radius(f.space, out.points);
  return out;
}

}  // namespace polyent
