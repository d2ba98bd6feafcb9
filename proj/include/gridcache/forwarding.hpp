#pragma once

// Interest forwarding toward one producer:
//   1. never increase the distance to the producer;
//   2. head for the closest designated cache reachable under rule 1.
// Everything here works on |dx|, |dy| ("magnitudes") of producer-relative
// offsets, since the four quadrants mirror each other.

#include <optional>
#include <vector>

#include "gridcache/grid.hpp"
#include "gridcache/placement.hpp"

namespace gridcache {

enum class ForwardingMode {
  CacheAware,   // steer toward the closest allowed cache
  NearestAxis,  // drop to the nearest axis first, then run along it
};

class ForwardingContext {
 public:
  ForwardingContext(GridSpec grid, Coord producer, const Placement& placement,
                    ForwardingMode mode = ForwardingMode::CacheAware);

  /// Arbitrary designated set given as magnitudes (|dx|, |dy|), mirrored
  /// into every quadrant. Mainly for tests and what-if analysis.
  ForwardingContext(GridSpec grid, Coord producer, const std::vector<Offset>& cache_magnitudes,
                    ForwardingMode mode = ForwardingMode::CacheAware);

  const GridSpec& grid() const { return grid_; }
  Coord producer() const { return producer_; }
  ForwardingMode mode() const { return mode_; }

  Offset offset_of(Coord node) const { return normalize_offset(node, producer_, grid_); }
  Coord coord_of(Offset off) const { return apply_offset(producer_, off, grid_); }

  /// Designated cache for the prefix (the producer itself is not one).
  bool is_cache(Offset node) const;
  bool is_cache(Coord node) const { return is_cache(offset_of(node)); }

  /// Where an Interest from `node` is satisfied: the signed offset of its
  /// serving cache, or nullopt for the producer.
  std::optional<Offset> serving_cache(Offset node) const;

  /// Hops from `node` to its serving point.
  int serving_distance(Offset node) const;

  /// Next node on the way to the serving point. Throws ContractViolation
  /// when called on the serving point itself.
  Offset next_hop(Offset node) const;

  /// Next hop for an Interest reaching a designated cache that does not
  /// hold the Data yet: toward the closest allowed cache strictly inward,
  /// or the producer.
  Offset forward_past(Offset node) const;

  /// Nodes visited from `consumer` to its serving point, both included.
  std::vector<Coord> trace_path(Coord consumer) const;

  /// Exact mean trace_path length over every node of the torus.
  Rational static_average_path() const;

  /// Same mean restricted to the quadrant [0,h) x [0,v).
  Rational quadrant_average_path() const;

 private:
  struct Magnitude {
    int x = 0;
    int y = 0;
  };

  std::size_t cell(int mx, int my) const { return std::size_t(mx) * (max_y_ + 1) + my; }
  void build(const std::vector<Offset>& magnitudes);
  bool is_stop(Offset node) const;
  Offset step(Offset node, bool along_x) const;

  GridSpec grid_;
  Coord producer_;
  ForwardingMode mode_;
  int max_x_ = 0;  // largest |dx| on the torus
  int max_y_ = 0;
  std::vector<char> designated_;       // by magnitude cell
  std::vector<Magnitude> serving_;     // cache-aware serving point by cell
};

/// Designated cache magnitudes implied by a placement.
std::vector<Offset> cache_magnitudes(const Placement& placement, const GridSpec& grid);

}  // namespace gridcache
