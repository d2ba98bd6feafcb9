#include "gridcache/placement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gridcache/error.hpp"

namespace gridcache {

Rational Rational::of(int64_t num, int64_t den) {
  if (den <= 0 || num < 0) throw InvalidArgument("rational must be non-negative with positive denominator");
  const int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string to_string(const Rational& q) {
  return q.den == 1 ? std::to_string(q.num)
                    : std::to_string(q.num) + "/" + std::to_string(q.den);
}

Axis other(Axis a) { return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal; }

std::vector<AxisCache> merged_sequence(const AxesPlacement& p) {
  std::vector<AxisCache> out;
  out.reserve(p.size());
  for (int x : p.h_axis) out.push_back({x, Axis::Horizontal});
  for (int y : p.v_axis) out.push_back({y, Axis::Vertical});
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const AxesPlacement& p, const GridSpec& g) {
  auto check_axis = [](const std::vector<int>& axis, int bound, const char* name) {
    for (std::size_t i = 0; i < axis.size(); ++i) {
      if (axis[i] <= 0 || axis[i] >= bound) {
        throw InvalidArgument(std::string(name) + " entry " + std::to_string(axis[i]) +
                              " outside (0, " + std::to_string(bound) + ")");
      }
      if (i > 0 && axis[i] <= axis[i - 1]) {
        throw InvalidArgument(std::string(name) + " must be strictly increasing");
      }
    }
  };
  check_axis(p.h_axis, g.h(), "h_axis");
  check_axis(p.v_axis, g.v(), "v_axis");
  std::vector<int> shared;
  std::set_intersection(p.h_axis.begin(), p.h_axis.end(), p.v_axis.begin(), p.v_axis.end(),
                        std::back_inserter(shared));
  if (!shared.empty()) {
    throw InvalidArgument("position " + std::to_string(shared.front()) +
                          " appears on both axes");
  }
}

void validate(const RegularPlacement& p, const GridSpec& g) {
  if (p.r < 1) throw Infeasible("subdivision factor r must be >= 1");
  if (g.h() % p.r != 0 || g.v() % p.r != 0) {
    throw Infeasible("r=" + std::to_string(p.r) + " does not divide h=" +
                     std::to_string(g.h()) + " and v=" + std::to_string(g.v()));
  }
}

void validate(const Placement& p, const GridSpec& g) {
  std::visit([&](const auto& q) { validate(q, g); }, p);
}

int64_t region_cost(int64_t a1, int64_t a2, int64_t b) {
  if (a2 < a1) throw InvalidArgument("region_cost: a2 < a1");
  if (b < 0) throw InvalidArgument("region_cost: b < 0");
  const int64_t w = a2 - a1;
  // b * w * (w + b - 2) is always even: if b and w are both odd, w + b - 2 is even.
  return b * w * (w + b - 2) / 2;
}

Rational baseline_average(const GridSpec& g) {
  return Rational::of(g.h() + g.v() - 2, 2);
}

RegularResult regular_placement(const GridSpec& g, int r) {
  validate(RegularPlacement{r}, g);
  const int sx = g.h() / r;
  const int sy = g.v() / r;
  RegularResult out;
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      if (a == 0 && b == 0) continue;
      out.caches.push_back({a * sx, b * sy});
    }
  }
  // Each of the r^2 cells contributes the same sum of (i + j).
  out.report.total_cost = int64_t{r} * r * region_cost(0, sx, sy);
  out.report.average_distance =
      Rational::of(out.report.total_cost, int64_t{g.h()} * g.v());
  out.report.cache_count_full_network = 4 * int64_t{r} * (r - 1);
  out.max_distance = sx + sy - 2;
  return out;
}

namespace {

// First entry of `axis` strictly greater than `value`, or `bound`.
int next_above(std::span<const int> axis, int value, int bound) {
  const auto it = std::upper_bound(axis.begin(), axis.end(), value);
  return it == axis.end() ? bound : *it;
}

}  // namespace

std::vector<Region> axes_region_decomposition(const AxesPlacement& p, const GridSpec& g) {
  validate(p, g);
  const int h = g.h();
  const int v = g.v();
  std::vector<Region> out;
  out.push_back({0, p.h_axis.empty() ? h : p.h_axis.front(), 0,
                 p.v_axis.empty() ? v : p.v_axis.front(), std::nullopt});
  for (const AxisCache& c : merged_sequence(p)) {
    if (c.axis == Axis::Horizontal) {
      out.push_back({c.position, next_above(p.h_axis, c.position, h), 0,
                     next_above(p.v_axis, c.position, v), Offset{c.position, 0}});
    } else {
      out.push_back({0, next_above(p.h_axis, c.position, h), c.position,
                     next_above(p.v_axis, c.position, v), Offset{0, c.position}});
    }
  }
  return out;
}

int64_t axes_cost(std::span<const int> h_axis, std::span<const int> v_axis, int h, int v) {
  int64_t total = region_cost(0, h_axis.empty() ? h : h_axis.front(),
                              v_axis.empty() ? v : v_axis.front());
  for (std::size_t i = 0; i < h_axis.size(); ++i) {
    const int next = i + 1 < h_axis.size() ? h_axis[i + 1] : h;
    total += region_cost(h_axis[i], next, next_above(v_axis, h_axis[i], v));
  }
  for (std::size_t j = 0; j < v_axis.size(); ++j) {
    const int next = j + 1 < v_axis.size() ? v_axis[j + 1] : v;
    total += region_cost(v_axis[j], next, next_above(h_axis, v_axis[j], h));
  }
  return total;
}

PlacementReport axes_total_cost(const AxesPlacement& p, const GridSpec& g) {
  validate(p, g);
  PlacementReport rep;
  rep.total_cost = axes_cost(p.h_axis, p.v_axis, g.h(), g.v());
  rep.average_distance = Rational::of(rep.total_cost, int64_t{g.h()} * g.v());
  rep.cache_count_full_network = 2 * static_cast<int64_t>(p.size());
  return rep;
}

int64_t full_network_cache_count(const Placement& p) {
  if (const auto* axes = std::get_if<AxesPlacement>(&p)) {
    return 2 * static_cast<int64_t>(axes->size());
  }
  const int r = std::get<RegularPlacement>(p).r;
  return 4 * int64_t{r} * (r - 1);
}

PlacementReport placement_report(const Placement& p, const GridSpec& g) {
  if (const auto* axes = std::get_if<AxesPlacement>(&p)) return axes_total_cost(*axes, g);
  return regular_placement(g, std::get<RegularPlacement>(p).r).report;
}

std::string describe(const Placement& p) {
  std::ostringstream os;
  if (const auto* axes = std::get_if<AxesPlacement>(&p)) {
    auto list = [&](const std::vector<int>& v) {
      os << '{';
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << '}';
    };
    os << "axes H=";
    list(axes->h_axis);
    os << " V=";
    list(axes->v_axis);
  } else {
    os << "regular r=" << std::get<RegularPlacement>(p).r;
  }
  return os.str();
}

}  // namespace gridcache
