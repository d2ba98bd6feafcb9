#pragma once

// Torus model of a constellation with four inter-satellite links per
// satellite. Planes run along x, satellites within a plane along y.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gridcache {

struct Coord {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

/// Signed position of a node relative to a center node, taken along the
/// shorter way around each ring.
struct Offset {
  int dx = 0;
  int dy = 0;
  friend constexpr auto operator<=>(const Offset&, const Offset&) = default;
};

class GridSpec {
 public:
  /// Throws InvalidArgument unless both dimensions are at least 2.
  GridSpec(int planes, int sats_per_plane);

  /// Parses "PLANESxSATS", e.g. "60x42".
  static GridSpec parse(std::string_view text);

  int planes() const { return planes_; }
  int sats_per_plane() const { return sats_; }

  /// Quadrant width and height (integer halves of the dimensions).
  int h() const { return planes_ / 2; }
  int v() const { return sats_ / 2; }

  int64_t node_count() const { return int64_t{planes_} * sats_; }

  /// Largest hop distance between two nodes.
  int diameter() const { return planes_ / 2 + sats_ / 2; }

  bool contains(Coord c) const {
    return c.x >= 0 && c.x < planes_ && c.y >= 0 && c.y < sats_;
  }

  /// Reduces arbitrary integers into the residue rings of the grid.
  Coord wrap(int64_t x, int64_t y) const;

  /// Row-major node index (x * sats_per_plane + y) and its inverse.
  int64_t index(Coord c) const { return int64_t{c.x} * sats_ + c.y; }
  Coord coord(int64_t index) const {
    return {static_cast<int>(index / sats_), static_cast<int>(index % sats_)};
  }

  std::string to_string() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  int planes_;
  int sats_;
};

/// Modular taxicab distance: the hop count of a shortest path on the torus.
int modular_distance(Coord a, Coord b, const GridSpec& g);

/// Offset of `node` as seen from `center`. Each component takes the shorter
/// direction; an exact tie (antipodal position on an even ring) is positive.
Offset normalize_offset(Coord node, Coord center, const GridSpec& g);

/// Inverse of normalize_offset.
Coord apply_offset(Coord center, Offset off, const GridSpec& g);

/// The four link neighbors in the order +x, -x, +y, -y. On a dimension of
/// size 2 the two neighbors along that dimension coincide.
std::array<Coord, 4> neighbors(Coord node, const GridSpec& g);

}  // namespace gridcache
