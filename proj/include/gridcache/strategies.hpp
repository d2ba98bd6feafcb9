#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridcache/grid.hpp"
#include "gridcache/placement.hpp"

namespace gridcache {

enum class Strategy { Axes, Regular };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

/// Per-quadrant axes cache count for a network-wide budget: every axis
/// cache is mirrored onto the opposite semi-axis, so B maps to B / 2.
/// nullopt when B is odd or negative.
std::optional<int> axes_caches_for_budget(int64_t network_budget);

/// Subdivision factor r with 4r(r-1) = B that divides both h and v.
std::optional<int> regular_factor_for_budget(const GridSpec& g, int64_t network_budget);

struct StrategyRow {
  int64_t budget = 0;
  Strategy strategy = Strategy::Axes;
  bool reachable = false;
  std::string reason;  // why not, when unreachable
  std::optional<Placement> placement;
  Rational average_distance;
  double reduction = 0.0;  // 1 - average / baseline
};

/// Two rows per budget, axes first. Unreachable combinations are kept as
/// rows with reachable = false.
std::vector<StrategyRow> compare_strategies(const GridSpec& g, std::span<const int64_t> budgets);

}  // namespace gridcache
