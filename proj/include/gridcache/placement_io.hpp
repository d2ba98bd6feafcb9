#pragma once

// Placement files:
//   {"version": 1,
//    "grid": {"planes": 60, "sats_per_plane": 42},
//    "strategy": "axes",
//    "h_axis": [11, 18, 24], "v_axis": [8, 15]}
// Regular placements carry "strategy": "regular" and "r" instead of the
// axis lists. "version" is optional on input.

#include <filesystem>
#include <string>

#include "gridcache/error.hpp"
#include "gridcache/grid.hpp"
#include "gridcache/placement.hpp"

namespace gridcache {

struct PlacementFile {
  GridSpec grid{2, 2};
  Placement placement;
  friend bool operator==(const PlacementFile&, const PlacementFile&) = default;
};

std::string placement_to_json(const PlacementFile& f);

/// Parses and validates against the embedded grid. Throws ParseError for
/// malformed documents and Infeasible/InvalidArgument for placements that
/// do not fit the grid.
PlacementFile placement_from_json(const std::string& text);

void write_placement(const std::filesystem::path& path, const PlacementFile& f);
PlacementFile read_placement(const std::filesystem::path& path);

}  // namespace gridcache
