#include "gridcache/strategies.hpp"

#include "gridcache/error.hpp"
#include "gridcache/optimizer.hpp"

namespace gridcache {

std::string to_string(Strategy s) { return s == Strategy::Axes ? "axes" : "regular"; }

Strategy parse_strategy(const std::string& text) {
  if (text == "axes") return Strategy::Axes;
  if (text == "regular") return Strategy::Regular;
  throw InvalidArgument("unknown strategy '" + text + "' (expected axes or regular)");
}

std::optional<int> axes_caches_for_budget(int64_t network_budget) {
  if (network_budget < 0 || network_budget % 2 != 0) return std::nullopt;
  return static_cast<int>(network_budget / 2);
}

std::optional<int> regular_factor_for_budget(const GridSpec& g, int64_t network_budget) {
  for (int r = 1; r <= std::min(g.h(), g.v()); ++r) {
    const int64_t count = 4 * int64_t{r} * (r - 1);
    if (count > network_budget) break;
    if (count == network_budget && g.h() % r == 0 && g.v() % r == 0) return r;
  }
  return std::nullopt;
}

std::vector<StrategyRow> compare_strategies(const GridSpec& g, std::span<const int64_t> budgets) {
  const double baseline = baseline_average(g).value();
  std::vector<StrategyRow> rows;
  for (const int64_t b : budgets) {
    StrategyRow axes;
    axes.budget = b;
    if (const auto n = axes_caches_for_budget(b); !n) {
      axes.reason = "budget must be even (axis caches come in mirrored pairs)";
    } else if (*n > max_axis_caches(g)) {
      axes.reason = "more than " + std::to_string(max_axis_caches(g)) + " caches per quadrant";
    } else {
      Placement p = optimize_axes_placement(g, *n);
      axes.reachable = true;
      axes.average_distance = placement_report(p, g).average_distance;
      axes.placement = std::move(p);
    }
    rows.push_back(std::move(axes));

    StrategyRow reg;
    reg.budget = b;
    reg.strategy = Strategy::Regular;
    if (const auto r = regular_factor_for_budget(g, b); !r) {
      reg.reason = "no subdivision r with 4r(r-1) = budget dividing h and v";
    } else {
      Placement p = RegularPlacement{*r};
      reg.reachable = true;
      reg.average_distance = placement_report(p, g).average_distance;
      reg.placement = std::move(p);
    }
    rows.push_back(std::move(reg));
  }
  for (auto& row : rows) {
    if (row.reachable) row.reduction = baseline > 0 ? 1.0 - row.average_distance.value() / baseline : 0.0;
  }
  return rows;
}

}  // namespace gridcache
