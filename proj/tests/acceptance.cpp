// Acceptance checks 1-8. One PASS/FAIL line per criterion; exit status is
// the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gridcache/forwarding.hpp"
#include "gridcache/ndn_sim.hpp"
#include "gridcache/optimizer.hpp"
#include "gridcache/strategies.hpp"

using namespace gridcache;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int report(int id, const char* name, const std::function<Outcome()>& check) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
  std::printf("[%s] criterion %d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

Outcome placement_reproduction() {
  const auto t0 = Clock::now();
  const GridSpec g(60, 42);
  const AxesPlacement p = optimize_axes_placement(g, 5);
  const double t = seconds_since(t0);
  const bool ok = p == AxesPlacement{{11, 18, 24}, {8, 15}} && t < 1.0;
  return {ok, describe(p) + ", cost " + std::to_string(axes_total_cost(p, g).total_cost) + ", solve " +
                  fmt(t, 6) + "s"};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  int instances = 0, matches = 0;
  std::string first_bad;
  for (int h : {6, 8, 10, 12}) {
    const GridSpec g(2 * h, 2 * h);
    for (int n = 1; n <= 4; ++n) {
      ++instances;
      const int64_t fast = axes_total_cost(optimize_axes_placement(g, n), g).total_cost;
      const int64_t best = exhaustive_axes_placement(g, n, {.interleaved_only = false}).report.total_cost;
      if (fast == best) {
        ++matches;
      } else if (first_bad.empty()) {
        first_bad = ", first mismatch h=" + std::to_string(h) + " N=" + std::to_string(n);
      }
    }
  }
  const double t = seconds_since(t0);
  return {matches == instances && t < 120.0,
          std::to_string(matches) + "/" + std::to_string(instances) + " exact cost matches" + first_bad};
}

Outcome interleaving() {
  int instances = 0, interleaved = 0;
  for (int h : {6, 8, 10, 12}) {
    const GridSpec g(2 * h, 2 * h);
    for (int n = 1; n <= 4; ++n) {
      ++instances;
      // Some global optimum is interleaved iff restricting the search to
      // interleaved placements loses nothing.
      const int64_t full = exhaustive_axes_placement(g, n, {.interleaved_only = false}).report.total_cost;
      const int64_t inter = exhaustive_axes_placement(g, n, {.interleaved_only = true}).report.total_cost;
      interleaved += full == inter;
    }
  }
  return {interleaved == instances, std::to_string(interleaved) + "/" + std::to_string(instances) +
                                        " instances with an interleaved global optimum"};
}

Outcome closed_forms() {
  int64_t checked = 0, bad = 0;
  for (int64_t a1 = 0; a1 <= 20; ++a1) {
    for (int64_t a2 = a1; a2 <= 20; ++a2) {
      for (int64_t b = 0; b <= 20; ++b) {
        int64_t sum = 0;
        for (int64_t i = a1; i < a2; ++i) {
          for (int64_t j = 0; j < b; ++j) sum += i - a1 + j;
        }
        ++checked;
        bad += region_cost(a1, a2, b) != sum;
      }
    }
  }
  int regular_checked = 0, regular_bad = 0;
  for (const auto& g : {GridSpec(24, 24), GridSpec(60, 42), GridSpec(24, 36), GridSpec(120, 120)}) {
    for (int r = 1; r <= std::min(g.h(), g.v()); ++r) {
      if (g.h() % r != 0 || g.v() % r != 0) continue;
      ++regular_checked;
      const RegularResult res = regular_placement(g, r);
      int max_d = 0;
      int64_t total = 0;
      for (int x = 0; x < g.h(); ++x) {
        for (int y = 0; y < g.v(); ++y) {
          int best = x + y;
          for (const Offset& c : res.caches) {
            if (c.dx <= x && c.dy <= y) best = std::min(best, x - c.dx + y - c.dy);
          }
          total += best;
          max_d = std::max(max_d, best);
        }
      }
      const bool ok = res.report.average_distance == Rational::of(g.h() + g.v() - 2 * r, 2 * r) &&
                      res.report.cache_count_full_network == 4 * int64_t{r} * (r - 1) &&
                      res.max_distance == (g.h() + g.v()) / r - 2 && res.max_distance == max_d &&
                      res.report.total_cost == total;
      regular_bad += !ok;
    }
  }
  return {bad == 0 && regular_bad == 0,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " region_cost triples, " +
              std::to_string(regular_checked - regular_bad) + "/" + std::to_string(regular_checked) +
              " regular placements"};
}

SimConfig sim_60x42(int n, double duration) {
  SimConfig cfg;
  cfg.grid = GridSpec(60, 42);
  cfg.placement = optimize_axes_placement(cfg.grid, n);
  cfg.num_clients = 1000;
  cfg.duration = duration;
  cfg.replications = 25;
  cfg.rng_seed = 20240601;
  return cfg;
}

// Long enough that coalescing is negligible for every placement tested:
// 5000 times the 60x42 diameter.
constexpr double kLongDuration = 5000.0 * 51;

Outcome convergence() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (int n : {0, 1, 5, 10}) {
    const SimConfig cfg = sim_60x42(n, kLongDuration);
    const SimSummary s = summarize(run_replications(cfg));
    const double theory = ForwardingContext(cfg.grid, cfg.producer, cfg.placement).static_average_path().value();
    const double rel = (s.grand_mean - theory) / theory;
    ok = ok && std::abs(rel) <= 0.05;
    detail << "2x" << n << ": " << fmt(s.grand_mean, 3) << " vs " << fmt(theory, 3) << " ("
           << fmt(100 * rel, 2) << "%); ";
  }
  const double t = seconds_since(t0);
  ok = ok && t < 300.0;
  detail << "duration " << kLongDuration;
  return {ok, detail.str()};
}

Outcome coalescing() {
  const std::vector<double> durations{0, 10, 51, 510, 5100, 51000, kLongDuration};
  bool ok = true;
  std::ostringstream detail;
  for (int n : {0, 5}) {
    std::vector<double> mean, se;
    for (double d : durations) {
      const SimSummary s = summarize(run_replications(sim_60x42(n, d)));
      mean.push_back(s.grand_mean);
      se.push_back(*s.standard_error);
    }
    bool monotone = true;
    for (std::size_t k = 1; k < mean.size(); ++k) {
      monotone = monotone && mean[k] >= mean[k - 1] - std::max(se[k], se[k - 1]);
    }
    const bool below = mean.front() < mean.back();
    ok = ok && monotone && below;
    detail << "2x" << n << ":";
    for (double m : mean) detail << ' ' << fmt(m, 2);
    detail << (monotone ? " monotone" : " NOT monotone") << "; ";
  }
  detail << "durations 0..." << kLongDuration;
  return {ok, detail.str()};
}

Outcome strategy_comparison() {
  const GridSpec g(24, 24);
  const int64_t budgets[] = {4, 16};
  const double targets[] = {0.45, 0.64};
  bool ok = true;
  std::ostringstream detail;
  const auto rows = compare_strategies(g, budgets);
  for (int i = 0; i < 2; ++i) {
    const StrategyRow& row = rows[2 * i];  // axes row
    const int n = *axes_caches_for_budget(budgets[i]);
    // verify that the reported optimum is the global one
    const int64_t oracle = exhaustive_axes_placement(g, n, {.interleaved_only = false}).report.total_cost;
    const int64_t cost = axes_total_cost(std::get<AxesPlacement>(*row.placement), g).total_cost;
    const bool within = std::abs(row.reduction - targets[i]) <= 0.05;
    ok = ok && row.reachable && within && cost == oracle;
    detail << "budget " << budgets[i] << " (N=" << n << "): " << describe(*row.placement) << " avg "
           << fmt(row.average_distance.value(), 4) << ", reduction " << fmt(100 * row.reduction, 1) << "% (target "
           << fmt(100 * targets[i], 0) << "+-5), oracle " << (cost == oracle ? "agrees" : "DISAGREES") << "; ";
  }
  return {ok, detail.str()};
}

Outcome simulator_invariants() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  int passed = 0;
  for (int i = 0; i < 100; ++i) {
    SimConfig cfg;
    cfg.grid = GridSpec(2 + static_cast<int>(rng() % 23), 2 + static_cast<int>(rng() % 23));
    cfg.producer = {static_cast<int>(rng() % cfg.grid.planes()), static_cast<int>(rng() % cfg.grid.sats_per_plane())};
    const int n = static_cast<int>(rng() % (max_axis_caches(cfg.grid) + 1));
    cfg.placement = optimize_axes_placement(cfg.grid, n);
    cfg.num_clients = 1 + static_cast<int>(rng() % 500);
    cfg.duration = static_cast<double>(rng() % 4 == 0 ? 0 : rng() % 400);
    cfg.rng_seed = rng();
    const SimMetrics m = run_simulation(cfg);
    int64_t hops = 0;
    for (const auto& r : m.requests) hops += r.path_len;
    const bool conservation = hops == m.interest_tx && m.interest_tx == m.pit_entries_created &&
                              m.data_tx == m.interest_tx && m.pit_entries_left == 0 && m.undelivered == 0 &&
                              m.duplicate_deliveries == 0 &&
                              m.producer_hits + m.cache_hits + m.coalesced_requests == cfg.num_clients &&
                              std::accumulate(m.per_node_tx.begin(), m.per_node_tx.end(), int64_t{0}) ==
                                  m.interest_tx + m.data_tx;
    const bool discipline = m.storage_violations == 0;
    const bool deterministic = run_simulation(cfg) == m;
    passed += conservation && discipline && deterministic;
  }
  const double t = seconds_since(t0);
  return {passed == 100 && t < 120.0, std::to_string(passed) + "/100 configurations"};
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "placement reproduction", placement_reproduction);
  failures += report(2, "oracle equivalence", oracle_equivalence);
  failures += report(3, "interleaving", interleaving);
  failures += report(4, "closed forms", closed_forms);
  failures += report(5, "convergence", convergence);
  failures += report(6, "coalescing effect", coalescing);
  failures += report(7, "strategy comparison", strategy_comparison);
  failures += report(8, "simulator invariants", simulator_invariants);
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
