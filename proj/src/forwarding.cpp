#include "gridcache/forwarding.hpp"

#include <cstdlib>

#include "gridcache/error.hpp"

namespace gridcache {

std::vector<Offset> cache_magnitudes(const Placement& placement, const GridSpec& grid) {
  validate(placement, grid);
  std::vector<Offset> out;
  if (const auto* axes = std::get_if<AxesPlacement>(&placement)) {
    for (int x : axes->h_axis) out.push_back({x, 0});
    for (int y : axes->v_axis) out.push_back({0, y});
  } else {
    for (const Offset& o : regular_placement(grid, std::get<RegularPlacement>(placement).r).caches) {
      out.push_back(o);
    }
  }
  return out;
}

ForwardingContext::ForwardingContext(GridSpec grid, Coord producer, const Placement& placement,
                                     ForwardingMode mode)
    : grid_(grid), producer_(producer), mode_(mode) {
  if (!grid_.contains(producer)) throw InvalidArgument("producer outside grid");
  build(cache_magnitudes(placement, grid_));
}

ForwardingContext::ForwardingContext(GridSpec grid, Coord producer,
                                     const std::vector<Offset>& magnitudes, ForwardingMode mode)
    : grid_(grid), producer_(producer), mode_(mode) {
  if (!grid_.contains(producer)) throw InvalidArgument("producer outside grid");
  build(magnitudes);
}

void ForwardingContext::build(const std::vector<Offset>& magnitudes) {
  max_x_ = grid_.planes() / 2;
  max_y_ = grid_.sats_per_plane() / 2;
  designated_.assign(std::size_t(max_x_ + 1) * (max_y_ + 1), 0);
  for (const Offset& m : magnitudes) {
    if (m.dx < 0 || m.dy < 0 || m.dx > max_x_ || m.dy > max_y_) {
      throw InvalidArgument("cache magnitude outside the grid");
    }
    if (m.dx == 0 && m.dy == 0) continue;  // producer
    designated_[cell(m.dx, m.dy)] = 1;
  }

  // The best allowed cache of (x, y) is the best among itself and the best
  // of its two inward neighbors: dominance is inherited.
  serving_.assign(designated_.size(), {});
  for (int x = 0; x <= max_x_; ++x) {
    for (int y = 0; y <= max_y_; ++y) {
      if (designated_[cell(x, y)] || (x == 0 && y == 0)) {
        serving_[cell(x, y)] = {x, y};
        continue;
      }
      Magnitude best{};
      bool have = false;
      auto offer = [&](Magnitude m) {
        if (!have || m.x + m.y > best.x + best.y || (m.x + m.y == best.x + best.y && m.x > best.x)) {
          best = m;
          have = true;
        }
      };
      if (x > 0) offer(serving_[cell(x - 1, y)]);
      if (y > 0) offer(serving_[cell(x, y - 1)]);
      serving_[cell(x, y)] = best;
    }
  }
}

bool ForwardingContext::is_cache(Offset node) const {
  return designated_[cell(std::abs(node.dx), std::abs(node.dy))] != 0;
}

bool ForwardingContext::is_stop(Offset node) const {
  return (node.dx == 0 && node.dy == 0) || is_cache(node);
}

Offset ForwardingContext::step(Offset node, bool along_x) const {
  if (along_x) {
    node.dx += node.dx > 0 ? -1 : 1;
  } else {
    node.dy += node.dy > 0 ? -1 : 1;
  }
  return node;
}

std::optional<Offset> ForwardingContext::serving_cache(Offset node) const {
  if (mode_ == ForwardingMode::NearestAxis) {
    Offset cur = node;
    while (!is_stop(cur)) cur = next_hop(cur);
    if (cur.dx == 0 && cur.dy == 0) return std::nullopt;
    return cur;
  }
  const Magnitude m = serving_[cell(std::abs(node.dx), std::abs(node.dy))];
  if (m.x == 0 && m.y == 0) return std::nullopt;
  return Offset{node.dx < 0 ? -m.x : m.x, node.dy < 0 ? -m.y : m.y};
}

int ForwardingContext::serving_distance(Offset node) const {
  const auto s = serving_cache(node);
  const Offset target = s.value_or(Offset{0, 0});
  return std::abs(node.dx - target.dx) + std::abs(node.dy - target.dy);
}

Offset ForwardingContext::next_hop(Offset node) const {
  const int ax = std::abs(node.dx);
  const int ay = std::abs(node.dy);
  if (mode_ == ForwardingMode::NearestAxis) {
    if (is_stop(node)) throw ContractViolation("next_hop called at the serving point");
    // Off-axis: close the smaller coordinate first (x on ties), then follow the axis.
    if (ax > 0 && ay > 0) return step(node, ax <= ay);
    return step(node, ax > 0);
  }
  const Magnitude s = serving_[cell(ax, ay)];
  const int gap_x = ax - s.x;
  const int gap_y = ay - s.y;
  if (gap_x <= 0 && gap_y <= 0) {
    throw ContractViolation("next_hop called at the serving point");
  }
  if (gap_x > 0 && gap_y > 0) return step(node, gap_x >= gap_y);
  return step(node, gap_x > 0);
}

Offset ForwardingContext::forward_past(Offset node) const {
  const int ax = std::abs(node.dx);
  const int ay = std::abs(node.dy);
  if (ax == 0 && ay == 0) throw ContractViolation("forward_past called at the producer");
  if (mode_ == ForwardingMode::NearestAxis) {
    if (ax > 0 && ay > 0) return step(node, ax <= ay);
    return step(node, ax > 0);
  }
  Magnitude target{};
  bool have = false;
  auto offer = [&](Magnitude m) {
    if (!have || m.x + m.y > target.x + target.y ||
        (m.x + m.y == target.x + target.y && m.x > target.x)) {
      target = m;
      have = true;
    }
  };
  if (ax > 0) offer(serving_[cell(ax - 1, ay)]);
  if (ay > 0) offer(serving_[cell(ax, ay - 1)]);
  const int gap_x = ax - target.x;
  const int gap_y = ay - target.y;
  if (gap_x > 0 && gap_y > 0) return step(node, gap_x >= gap_y);
  return step(node, gap_x > 0);
}

std::vector<Coord> ForwardingContext::trace_path(Coord consumer) const {
  if (!grid_.contains(consumer)) throw InvalidArgument("consumer outside grid");
  std::vector<Coord> path{consumer};
  Offset cur = offset_of(consumer);
  while (!is_stop(cur)) {
    cur = next_hop(cur);
    path.push_back(coord_of(cur));
    if (static_cast<int>(path.size()) > grid_.diameter() + 1) {
      throw ContractViolation("forwarding path longer than the grid diameter");
    }
  }
  return path;
}

Rational ForwardingContext::static_average_path() const {
  int64_t total = 0;
  for (int64_t i = 0; i < grid_.node_count(); ++i) {
    total += serving_distance(offset_of(grid_.coord(i)));
  }
  return Rational::of(total, grid_.node_count());
}

Rational ForwardingContext::quadrant_average_path() const {
  int64_t total = 0;
  for (int x = 0; x < grid_.h(); ++x) {
    for (int y = 0; y < grid_.v(); ++y) total += serving_distance({x, y});
  }
  return Rational::of(total, int64_t{grid_.h()} * grid_.v());
}

}  // namespace gridcache
