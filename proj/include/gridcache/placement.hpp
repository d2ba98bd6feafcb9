#pragma once

// Designated-cache placements for one producer, described in the quadrant
// of non-negative offsets [0,h) x [0,v). The other three quadrants mirror
// it; caches on a semi-axis are shared by the two quadrants touching it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gridcache/grid.hpp"

namespace gridcache {

/// Exact non-negative fraction, always stored in lowest terms.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  static Rational of(int64_t num, int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& q);

/// Caches at the lower-left corner of each cell of an r x r subdivision of
/// the quadrant.
struct RegularPlacement {
  int r = 1;
  friend bool operator==(const RegularPlacement&, const RegularPlacement&) = default;
};

/// Caches on the producer's row (h_axis, abscissas) and column (v_axis,
/// ordinates). Both lists are strictly increasing.
struct AxesPlacement {
  std::vector<int> h_axis;
  std::vector<int> v_axis;
  std::size_t size() const { return h_axis.size() + v_axis.size(); }
  friend bool operator==(const AxesPlacement&, const AxesPlacement&) = default;
};

using Placement = std::variant<AxesPlacement, RegularPlacement>;

enum class Axis { Horizontal, Vertical };

Axis other(Axis a);

struct AxisCache {
  int position = 0;
  Axis axis = Axis::Horizontal;
  friend auto operator<=>(const AxisCache&, const AxisCache&) = default;
};

/// Both axes merged into one increasing sequence, each value tagged with
/// its axis. Comparing these sequences lexicographically (Horizontal before
/// Vertical on equal positions) is the canonical ordering of placements.
std::vector<AxisCache> merged_sequence(const AxesPlacement& p);

/// Throws InvalidArgument unless every entry lies strictly inside its axis
/// bound, each axis is strictly increasing, and no position appears on
/// both axes.
void validate(const AxesPlacement& p, const GridSpec& g);

/// Throws Infeasible unless r >= 1 divides both h and v.
void validate(const RegularPlacement& p, const GridSpec& g);

void validate(const Placement& p, const GridSpec& g);

/// Axis-aligned half-open rectangle of quadrant nodes sharing one server.
struct Region {
  int x_lo = 0;
  int x_hi = 0;
  int y_lo = 0;
  int y_hi = 0;
  std::optional<Offset> server;  // nullopt: served by the producer

  int64_t size() const { return int64_t{x_hi - x_lo} * (y_hi - y_lo); }
  bool contains(int x, int y) const {
    return x >= x_lo && x < x_hi && y >= y_lo && y < y_hi;
  }
  friend bool operator==(const Region&, const Region&) = default;
};

struct PlacementReport {
  int64_t total_cost = 0;          // summed hops to the serving cache, one quadrant
  Rational average_distance;       // total_cost / (h * v)
  int64_t cache_count_full_network = 0;
};

/// Sum of distances to (a1, 0) over the rectangle [a1, a2) x [0, b):
/// b * (a2 - a1) * (a2 - a1 + b - 2) / 2.
int64_t region_cost(int64_t a1, int64_t a2, int64_t b);

/// Quadrant average with no caches at all: (h + v) / 2 - 1.
Rational baseline_average(const GridSpec& g);

struct RegularResult {
  std::vector<Offset> caches;  // quadrant caches, producer excluded
  PlacementReport report;
  int max_distance = 0;        // (h + v) / r - 2
};

RegularResult regular_placement(const GridSpec& g, int r);

/// Producer region first, then one region per cache in merged order.
std::vector<Region> axes_region_decomposition(const AxesPlacement& p, const GridSpec& g);

/// Allocation-free cost of an axes placement given as sorted position
/// lists. No validation.
int64_t axes_cost(std::span<const int> h_axis, std::span<const int> v_axis, int h, int v);

PlacementReport axes_total_cost(const AxesPlacement& p, const GridSpec& g);

/// Network-wide number of designated caches for any placement.
int64_t full_network_cache_count(const Placement& p);

PlacementReport placement_report(const Placement& p, const GridSpec& g);

std::string describe(const Placement& p);

}  // namespace gridcache
