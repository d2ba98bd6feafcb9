#include "gridcache/optimizer.hpp"

#include <algorithm>
#include <limits>

#include "gridcache/error.hpp"

namespace gridcache {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

void check_count(const GridSpec& g, int n) {
  if (n < 0) throw InvalidArgument("cache count must be >= 0");
  if (n > max_axis_caches(g)) {
    throw Infeasible(std::to_string(n) + " axis caches do not fit on " + g.to_string() +
                     " (at most " + std::to_string(max_axis_caches(g)) + ")");
  }
}

int bound_of(Axis a, const GridSpec& g) { return a == Axis::Horizontal ? g.h() : g.v(); }

// Axis of the k-th cache (0-based) of an interleaving that starts on `first`.
Axis axis_at(int k, int value, Axis first, const GridSpec& g) {
  const Axis want = k % 2 == 0 ? first : other(first);
  return value >= bound_of(want, g) ? other(want) : want;
}

// Cost terms of an interleaved sequence. Every cache's region is bounded by
// its next cache on the same axis and its next cache on the other axis, and
// in an interleaving both are among the two following positions.
class ChainCost {
 public:
  ChainCost(const GridSpec& g, Axis first) : g_(g), first_(first) {}

  // Producer region given the first two positions (0 means absent).
  int64_t producer(int c0, int c1) const {
    if (c0 == 0) return region_cost(0, g_.h(), g_.v());
    const Axis a0 = axis_at(0, c0, first_, g_);
    int first_other = bound_of(other(a0), g_);
    if (c1 != 0 && axis_at(1, c1, first_, g_) != a0) first_other = c1;
    const int h1 = a0 == Axis::Horizontal ? c0 : first_other;
    const int v1 = a0 == Axis::Horizontal ? first_other : c0;
    return region_cost(0, h1, v1);
  }

  // Region of the k-th cache at position c given the next two (0 = absent).
  int64_t cache(int k, int c, int next1, int next2) const {
    const Axis a = axis_at(k, c, first_, g_);
    int same = bound_of(a, g_);
    int cross = bound_of(other(a), g_);
    if (next1 != 0) {
      if (axis_at(k + 1, next1, first_, g_) == a) {
        same = next1;
      } else {
        cross = next1;
        if (next2 != 0 && axis_at(k + 2, next2, first_, g_) == a) same = next2;
      }
    }
    return region_cost(c, same, cross);
  }

 private:
  const GridSpec& g_;
  Axis first_;
};

struct ParityOptimum {
  int64_t cost = kInf;
  std::vector<int> positions;
};

// Exact minimum over interleavings starting on `first`; returns the
// lexicographically largest optimal position sequence.
ParityOptimum solve_parity(const GridSpec& g, int n, Axis first) {
  ParityOptimum best;
  const ChainCost cost(g, first);
  if (n == 0) {
    best.cost = cost.producer(0, 0);
    return best;
  }
  const int top = std::max(g.h(), g.v());  // positions live in [1, top)
  const int width = top;                   // index 0 encodes "absent"
  auto at = [width](int a, int b) { return static_cast<std::size_t>(a) * width + b; };

  // suffix[k][a][b]: cheapest total of the regions of caches k..n-1, given
  // position a for cache k and b for cache k+1 (b = 0 when k = n-1).
  std::vector<std::vector<int64_t>> suffix(n, std::vector<int64_t>(std::size_t(width) * width, kInf));
  for (int a = 1; a < top; ++a) suffix[n - 1][at(a, 0)] = cost.cache(n - 1, a, 0, 0);
  for (int k = n - 2; k >= 0; --k) {
    for (int a = 1; a < top; ++a) {
      for (int b = a + 1; b < top; ++b) {
        int64_t m = kInf;
        if (k + 2 >= n) {
          m = cost.cache(k, a, b, 0) + suffix[k + 1][at(b, 0)];
        } else {
          for (int c = b + 1; c < top; ++c) {
            const int64_t tail = suffix[k + 1][at(b, c)];
            if (tail >= kInf) continue;
            m = std::min(m, cost.cache(k, a, b, c) + tail);
          }
        }
        suffix[k][at(a, b)] = m;
      }
    }
  }

  auto head = [&](int c0, int c1) -> int64_t {
    const int64_t tail = suffix[0][at(c0, c1)];
    return tail >= kInf ? kInf : cost.producer(c0, c1) + tail;
  };
  std::vector<std::pair<int, int>> starts;
  if (n == 1) {
    for (int a = 1; a < top; ++a) starts.emplace_back(a, 0);
  } else {
    for (int a = 1; a < top; ++a)
      for (int b = a + 1; b < top; ++b) starts.emplace_back(a, b);
  }
  for (auto [a, b] : starts) best.cost = std::min(best.cost, head(a, b));

  // Largest first position reaching the optimum, then largest second, ...
  int c0 = 0, c1 = 0;
  for (auto [a, b] : starts) {
    if (head(a, b) == best.cost && std::pair(a, b) > std::pair(c0, c1)) {
      c0 = a;
      c1 = b;
    }
  }
  best.positions.push_back(c0);
  if (n == 1) return best;
  best.positions.push_back(c1);
  for (int k = 0; k + 2 < n; ++k) {
    const int a = best.positions[k];
    const int b = best.positions[k + 1];
    const int64_t target = suffix[k][at(a, b)];
    int pick = 0;
    for (int c = top - 1; c > b; --c) {
      const int64_t tail = suffix[k + 1][at(b, c)];
      if (tail < kInf && cost.cache(k, a, b, c) + tail == target) {
        pick = c;
        break;
      }
    }
    if (pick == 0) throw ContractViolation("placement reconstruction lost the optimum");
    best.positions.push_back(pick);
  }
  return best;
}

int64_t cost_of(const AxesPlacement& p, const GridSpec& g) {
  return axes_cost(p.h_axis, p.v_axis, g.h(), g.v());
}

// Saturating binomial coefficient.
int64_t choose(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  for (int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc > 9.0e18L) return std::numeric_limits<int64_t>::max();
  }
  return static_cast<int64_t>(acc + 0.5L);
}

}  // namespace

int max_axis_caches(const GridSpec& g) { return std::max(g.h(), g.v()) - 1; }

AxesPlacement interleave(std::span<const int> positions, Axis first, const GridSpec& g) {
  const int top = std::max(g.h(), g.v());
  AxesPlacement out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const int c = positions[k];
    if (c < 1 || c >= top || (k > 0 && c <= positions[k - 1])) {
      throw InvalidArgument("interleave: positions must be increasing within [1, " +
                            std::to_string(top) + ")");
    }
    (axis_at(static_cast<int>(k), c, first, g) == Axis::Horizontal ? out.h_axis : out.v_axis)
        .push_back(c);
  }
  return out;
}

AxesPlacement optimize_axes_placement(const GridSpec& g, int n) {
  check_count(g, n);
  const ParityOptimum h_first = solve_parity(g, n, Axis::Horizontal);
  const ParityOptimum v_first = solve_parity(g, n, Axis::Vertical);
  // Vertical-first only wins when strictly cheaper or, at equal cost, with a
  // lexicographically larger position sequence.
  const bool take_v = v_first.cost < h_first.cost ||
                      (v_first.cost == h_first.cost && v_first.positions > h_first.positions);
  const ParityOptimum& best = take_v ? v_first : h_first;
  return interleave(best.positions, take_v ? Axis::Vertical : Axis::Horizontal, g);
}

AdvanceResult coordinate_advance(const GridSpec& g, int n, Axis first) {
  check_count(g, n);
  const int top = std::max(g.h(), g.v());
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i + 1;

  AdvanceResult res;
  auto evaluate = [&](const std::vector<int>& pos) {
    ++res.evaluations;
    return cost_of(interleave(pos, first, g), g);
  };
  int64_t lowest = evaluate(c);
  bool finish = false;
  while (!finish) {
    finish = true;
    ++res.sweeps;
    for (int i = n - 1; i >= 0; --i) {
      const int limit = i + 1 < n ? c[i + 1] : top;
      while (c[i] + 1 < limit) {
        std::vector<int> trial = c;
        ++trial[i];
        const int64_t current = evaluate(trial);
        if (current >= lowest) break;
        lowest = current;
        c = std::move(trial);
        ++res.accepted_advances;
        finish = false;
      }
    }
  }
  res.placement = interleave(c, first, g);
  res.cost = lowest;
  return res;
}

AdvanceResult coordinate_advance(const GridSpec& g, int n) {
  AdvanceResult a = coordinate_advance(g, n, Axis::Horizontal);
  AdvanceResult b = coordinate_advance(g, n, Axis::Vertical);
  return b.cost < a.cost ? b : a;
}

int64_t exhaustive_search_size(const GridSpec& g, int n, bool interleaved_only) {
  if (n < 0) return 0;
  const int64_t sets = choose(max_axis_caches(g), n);
  const int64_t per_set = interleaved_only ? 2 : (n >= 62 ? std::numeric_limits<int64_t>::max() : int64_t{1} << n);
  if (sets != 0 && per_set > std::numeric_limits<int64_t>::max() / sets) {
    return std::numeric_limits<int64_t>::max();
  }
  return sets * per_set;
}

AxesOptimum exhaustive_axes_placement(const GridSpec& g, int n, const ExhaustiveOptions& opts) {
  check_count(g, n);
  const int64_t size = exhaustive_search_size(g, n, opts.interleaved_only);
  if (size > opts.budget) {
    throw BudgetExceeded("exhaustive search over " + std::to_string(size) +
                         " placements exceeds budget " + std::to_string(opts.budget));
  }
  const int top = std::max(g.h(), g.v());
  AxesOptimum best;
  best.report.total_cost = kInf;
  std::vector<AxisCache> best_key;

  auto consider = [&](AxesPlacement&& p) {
    ++best.evaluated;
    const int64_t cost = cost_of(p, g);
    if (cost > best.report.total_cost) return;
    std::vector<AxisCache> key = merged_sequence(p);
    if (cost < best.report.total_cost || key < best_key) {
      best.report.total_cost = cost;
      best.placement = std::move(p);
      best_key = std::move(key);
    }
  };

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = i + 1;
  AxesPlacement scratch;
  while (true) {
    if (opts.interleaved_only) {
      consider(interleave(pos, Axis::Horizontal, g));
      consider(interleave(pos, Axis::Vertical, g));
    } else {
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        scratch.h_axis.clear();
        scratch.v_axis.clear();
        bool fits = true;
        for (int i = 0; i < n && fits; ++i) {
          if (mask >> i & 1U) {
            fits = pos[i] < g.v();
            scratch.v_axis.push_back(pos[i]);
          } else {
            fits = pos[i] < g.h();
            scratch.h_axis.push_back(pos[i]);
          }
        }
        if (fits) consider(AxesPlacement(scratch));
      }
    }
    // Next combination of n values from [1, top) in lexicographic order.
    int i = n - 1;
    while (i >= 0 && pos[i] == top - n + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < n; ++j) pos[j] = pos[j - 1] + 1;
  }
  best.report = axes_total_cost(best.placement, g);
  return best;
}

bool is_interleaved(const AxesPlacement& p, const GridSpec& g) {
  std::vector<int> pos;
  for (const AxisCache& c : merged_sequence(p)) pos.push_back(c.position);
  if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) return false;
  if (std::any_of(pos.begin(), pos.end(), [&](int c) { return c < 1 || c >= std::max(g.h(), g.v()); })) {
    return false;
  }
  return interleave(pos, Axis::Horizontal, g) == p || interleave(pos, Axis::Vertical, g) == p;
}

}  // namespace gridcache
