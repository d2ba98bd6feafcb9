#pragma once

// Choosing N in-axes cache positions for one quadrant.
//
// Positions are distinct values in [1, max(h, v)). An *interleaved*
// placement alternates axes along its merged sequence, starting on either
// axis; a value that does not fit on the axis it would alternate onto
// (value >= that axis bound) goes on the other axis instead. On square
// grids that fallback never triggers.

#include <cstdint>
#include <span>
#include <vector>

#include "gridcache/grid.hpp"
#include "gridcache/placement.hpp"

namespace gridcache {

/// Largest N any axes optimizer accepts: max(h, v) - 1.
int max_axis_caches(const GridSpec& g);

/// Interleaves increasing `positions` starting on `first`, with the
/// overflow fallback described above. Throws InvalidArgument on positions
/// outside [1, max(h, v)) or not strictly increasing.
AxesPlacement interleave(std::span<const int> positions, Axis first, const GridSpec& g);

/// Optimal interleaved placement of n caches.
///
/// The cost splits into one term per cache that depends only on the cache
/// and its two successors in merged order, so a dynamic program over
/// consecutive pairs finds the exact minimum for both starting axes. Among
/// equal-cost optima the one whose position sequence is lexicographically
/// largest (caches pushed furthest from the producer) wins, then the one
/// starting on the horizontal axis.
///
/// Throws InvalidArgument for n < 0 and Infeasible for n > max_axis_caches.
AxesPlacement optimize_axes_placement(const GridSpec& g, int n);

/// Outcome of the plain coordinate-advance search.
struct AdvanceResult {
  AxesPlacement placement;
  int64_t cost = 0;
  int accepted_advances = 0;  // moves that lowered the cost
  int evaluations = 0;        // cost evaluations including the initial one
  int sweeps = 0;
};

/// Coordinate-advance search: start from positions 1..n, then sweep from
/// the outermost cache inwards, advancing each one position at a time while
/// that strictly lowers the cost and it does not run into its successor;
/// repeat sweeps until one makes no change.
///
/// This is a local search. It never moves a cache that is packed against
/// its successor, so it can stop short of the optimum (on a 12x12 grid with
/// n = 4 it never leaves 1,2,3,4). optimize_axes_placement is the exact
/// solver.
AdvanceResult coordinate_advance(const GridSpec& g, int n, Axis first);

/// Best of coordinate_advance over both starting axes.
AdvanceResult coordinate_advance(const GridSpec& g, int n);

struct ExhaustiveOptions {
  bool interleaved_only = false;
  /// Upper bound on the number of placements to evaluate.
  int64_t budget = 50'000'000;
};

struct AxesOptimum {
  AxesPlacement placement;
  PlacementReport report;
  int64_t evaluated = 0;
};

/// Number of candidate placements exhaustive_axes_placement would visit,
/// saturating at INT64_MAX.
int64_t exhaustive_search_size(const GridSpec& g, int n, bool interleaved_only);

/// Brute-force minimizer over every placement of n caches: all axis
/// assignments of all position sets, or only interleaved ones. Ties go to
/// the lexicographically smallest merged sequence. Throws BudgetExceeded
/// when the search size is above the budget.
AxesOptimum exhaustive_axes_placement(const GridSpec& g, int n, const ExhaustiveOptions& opts = {});

/// True when `p` is one of the (at most two) interleavings of its own
/// merged position sequence.
bool is_interleaved(const AxesPlacement& p, const GridSpec& g);

}  // namespace gridcache
