#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "polyent/finset.hpp"
#include "polyent/grid.hpp"
#include "polyent/map_system.hpp"
#include "polyent/suspension.hpp"

namespace polyent {

enum class StateLayout {
  Plain,      // tuple of elems points, max metric over elements
  PaddedSet,  // multiset of elems points, Hausdorff metric (padding-invariant)
  Susp,       // [flag, radius, coords...]: collapse metric of SF_n^m
};

/// Layout of a flat state row plus the one-step distance on rows. States of
/// every estimated system (base points, product tuples, hyperspace sets,
/// suspension classes) are packed into fixed-width rows of doubles so orbit
/// caches stay contiguous.
struct StateGeometry {
  StateLayout layout = StateLayout::Plain;
  int elems = 1;  // points per state
  int edim = 1;   // coordinates per point
  std::vector<SpaceKind> kinds;  // per point-coordinate, length edim

  int width() const {
    return elems * edim + (layout == StateLayout::Susp ? 2 : 0);
  }
  double operator()(std::span<const double> a, std::span<const double> b) const;
};

/// Precomputed orbits of a state cloud: count x depth rows laid out
/// contiguously. Row (i, k) is the k-th image of state i.
class OrbitCache {
 public:
  OrbitCache() = default;
  OrbitCache(std::size_t count, int depth, int width)
      : count_(count), depth_(depth), width_(width),
        data_(count * static_cast<std::size_t>(depth) * width, 0.0) {}

  std::size_t count() const { return count_; }
  int depth() const { return depth_; }
  int width() const { return width_; }

  std::span<double> row(std::size_t i, int k) {
    return {data_.data() + (i * depth_ + k) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const double> row(std::size_t i, int k) const {
    return {data_.data() + (i * depth_ + k) * width_,
            static_cast<std::size_t>(width_)};
  }

 private:
  std::size_t count_ = 0;
  int depth_ = 0;
  int width_ = 0;
  std::vector<double> data_;
};

/// A cloud of initial states with their cached orbits and geometry; the unit
/// every entropy estimate runs on. Initial states are in canonical order.
struct StateCloud {
  OrbitCache cache;
  StateGeometry geom;
  std::string description;
};

StateCloud make_base_cloud(const MapSystem& f, const SampleGrid& cloud,
                           int depth);

/// Full tuple grid of the n-fold product system f^{xn} over the base cloud
/// (diagonals included).
StateCloud make_power_tuple_cloud(const MapSystem& f, const SampleGrid& base,
                                  int n, int depth);

/// Tuples of the product f x g over the two clouds.
StateCloud make_product_cloud(const MapSystem& f, const MapSystem& g,
                              const SampleGrid& gf, const SampleGrid& gg,
                              int depth);

/// Hyperspace F_n over the base cloud, padded-multiset representation.
StateCloud make_hyper_cloud(const MapSystem& f, const SampleGrid& base, int n,
                            int depth, unsigned long long cap);

/// Suspension SF_n^m over the base cloud (one collapsed state first).
StateCloud make_susp_cloud(const MapSystem& f, const SampleGrid& base, int n,
                           int m, int depth, unsigned long long cap);

/// Pairwise-distinct tuples (pi^{-1}(G_n)) over the base cloud.
StateCloud make_tuple_cloud(const MapSystem& f, const SampleGrid& base, int n,
                            int depth);

}  // namespace polyent
