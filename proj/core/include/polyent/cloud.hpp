#pragma once

#include "polyent/grid.hpp"
#include "polyent/map_system.hpp"

namespace polyent {

/// Adds exact backward-orbit saturation to a grid: preimage rounds of every
/// grid point (exact dedup) until nothing new appears or max_rounds is hit.
/// Resolves the preimage ladders along the unstable sides of the fixed
/// points, which is where separated orbit segments live. The input grid's
/// mesh still covers, so the net property is preserved.
SampleGrid saturate_grid(const MapSystem& f, const SampleGrid& grid,
                         int max_rounds);

/// Budgeted dynamic cloud of exactly `count` points (fewer only when the map
/// runs out of distinct orbit values): a uniform backbone plus backward and
/// forward orbit chains seeded at the midpoints of the wandering channels
/// (between adjacent declared fixed points), grown round-robin with exact
/// dedup. Chains retire when their value repeats exactly. Deterministic.
SampleGrid ladder_cloud(const MapSystem& f, int count);

}  // namespace polyent
