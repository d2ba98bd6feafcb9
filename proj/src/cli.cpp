#include "gridcache/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "gridcache/error.hpp"
#include "gridcache/format.hpp"
#include "gridcache/forwarding.hpp"
#include "gridcache/ndn_sim.hpp"
#include "gridcache/optimizer.hpp"
#include "gridcache/placement_io.hpp"
#include "gridcache/strategies.hpp"

namespace gridcache::cli {

namespace {

using nlohmann::json;

uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnv)) {
    uint64_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError(std::string(kSeedEnv) + " is not an unsigned integer: '" + env + "'");
    }
    return v;
  }
  return 1;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    double v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad value '" + item + "' in list '" + text + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

int64_t as_integer(double v, const char* what) {
  if (v != std::floor(v) || v < 0 || v > 1e15) {
    throw InvalidArgument(std::string(what) + " must be a non-negative integer, got " + format_double(v));
  }
  return static_cast<int64_t>(v);
}

// Options shared by every command that builds a placement inline.
struct PlacementOptions {
  std::string grid;
  std::string strategy = "axes";
  std::optional<int> caches;
  std::optional<int64_t> network_budget;
  std::optional<int> r;
  std::string method = "exact";

  void add_to(CLI::App& cmd, bool grid_required) {
    auto* g = cmd.add_option("--grid", grid, "Constellation as PLANESxSATS, e.g. 60x42");
    if (grid_required) g->required();
    cmd.add_option("--strategy", strategy, "axes or regular")->check(CLI::IsMember({"axes", "regular"}));
    cmd.add_option("--caches", caches, "Axes caches per quadrant (N)");
    cmd.add_option("--network-budget", network_budget, "Network-wide cache count (axes: N = B/2)");
    cmd.add_option("--r", r, "Regular subdivision factor");
    cmd.add_option("--method", method, "Axes optimizer: exact or advance")
        ->check(CLI::IsMember({"exact", "advance"}));
  }

  Placement resolve(const GridSpec& g) const {
    if (parse_strategy(strategy) == Strategy::Regular) {
      if (caches) throw InvalidArgument("--caches applies to the axes strategy; use --r or --network-budget");
      int factor = r.value_or(1);
      if (network_budget) {
        const auto found = regular_factor_for_budget(g, *network_budget);
        if (!found) {
          throw Infeasible("no regular placement on " + g.to_string() + " uses exactly " +
                           std::to_string(*network_budget) + " caches");
        }
        factor = *found;
      }
      validate(RegularPlacement{factor}, g);
      return RegularPlacement{factor};
    }
    if (r) throw InvalidArgument("--r applies to the regular strategy");
    int n = caches.value_or(0);
    if (network_budget) {
      if (caches) throw InvalidArgument("give either --caches or --network-budget, not both");
      const auto found = axes_caches_for_budget(*network_budget);
      if (!found) throw Infeasible("axes network budget must be even and non-negative");
      n = *found;
    }
    if (method == "advance") return coordinate_advance(g, n).placement;
    return optimize_axes_placement(g, n);
  }
};

void print_report(std::ostream& out, const GridSpec& g, const Placement& p) {
  const PlacementReport rep = placement_report(p, g);
  out << "grid " << g.to_string() << " (h=" << g.h() << ", v=" << g.v() << ")\n";
  out << "placement " << describe(p) << '\n';
  out << "total_cost " << rep.total_cost << '\n';
  out << "average_distance " << to_string(rep.average_distance) << " ("
      << format_double(rep.average_distance.value()) << ")\n";
  out << "baseline_average " << format_double(baseline_average(g).value()) << '\n';
  out << "cache_count_full_network " << rep.cache_count_full_network << '\n';
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  return f;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// --- optimize -------------------------------------------------------------

struct OptimizeCommand {
  PlacementOptions placement;
  std::string out_path;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("optimize", "Compute a cache placement and report its cost");
    placement.add_to(*cmd, true);
    cmd->add_option("--out", out_path, "Write the placement JSON here");
  }

  int run(std::ostream& out) const {
    const GridSpec g = GridSpec::parse(placement.grid);
    const auto start = std::chrono::steady_clock::now();
    const Placement p = placement.resolve(g);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print_report(out, g, p);
    out << "solve_seconds " << format_double(seconds) << '\n';
    if (!out_path.empty()) {
      auto f = open_output(out_path);
      f << placement_to_json({g, p});
      out << "wrote " << out_path << '\n';
    }
    return kOk;
  }
};

// --- oracle ---------------------------------------------------------------

struct OracleCommand {
  std::string grid;
  int caches = 0;
  bool all = false;
  int64_t budget = ExhaustiveOptions{}.budget;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("oracle", "Exhaustively search axes placements and compare with the optimizer");
    cmd->add_option("--grid", grid, "Constellation as PLANESxSATS")->required();
    cmd->add_option("--caches", caches, "Axes caches per quadrant (N)");
    cmd->add_flag("--all", all, "Include non-interleaved placements in the search");
    cmd->add_option("--budget", budget, "Maximum number of placements to evaluate");
  }

  int run(std::ostream& out) const {
    const GridSpec g = GridSpec::parse(grid);
    const AxesOptimum oracle = exhaustive_axes_placement(g, caches, {.interleaved_only = !all, .budget = budget});
    const AxesPlacement fast = optimize_axes_placement(g, caches);
    const int64_t fast_cost = axes_total_cost(fast, g).total_cost;
    out << "search " << (all ? "all placements" : "interleaved placements") << ", " << oracle.evaluated
        << " evaluated\n";
    out << "oracle " << describe(oracle.placement) << '\n';
    out << "oracle_cost " << oracle.report.total_cost << '\n';
    out << "oracle_interleaved " << (is_interleaved(oracle.placement, g) ? "yes" : "no") << '\n';
    out << "optimizer " << describe(fast) << '\n';
    out << "optimizer_cost " << fast_cost << '\n';
    const bool match = fast_cost == oracle.report.total_cost;
    out << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? kOk : kRuntimeFailure;
  }
};

// --- simulate -------------------------------------------------------------

struct SimulationOptions {
  int clients = 1000;
  double duration = 0.0;
  double hop_latency = 1.0;
  int replications = 1;
  std::optional<uint64_t> seed;
  std::string mode = "cache-aware";
  std::string producer = "0,0";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--clients", clients, "Number of consumers per replication");
    cmd.add_option("--duration", duration, "Requests are spread uniformly over [0, duration]");
    cmd.add_option("--hop-latency", hop_latency, "Time units per link traversal");
    cmd.add_option("--replications", replications, "Independent replications");
    cmd.add_option("--seed", seed, std::string("Master seed (default $") + kSeedEnv + " or 1)");
    cmd.add_option("--mode", mode, "cache-aware or nearest-axis forwarding")
        ->check(CLI::IsMember({"cache-aware", "nearest-axis"}));
    cmd.add_option("--producer", producer, "Producer node as X,Y");
  }

  SimConfig config(const GridSpec& g, const Placement& p) const {
    SimConfig cfg{g, p};
    const auto xy = parse_values(producer);
    if (xy.size() != 2) throw ParseError("--producer must be X,Y");
    cfg.producer = {static_cast<int>(as_integer(xy[0], "producer x")),
                    static_cast<int>(as_integer(xy[1], "producer y"))};
    cfg.num_clients = clients;
    cfg.duration = duration;
    cfg.hop_latency = hop_latency;
    cfg.replications = replications;
    cfg.rng_seed = seed ? *seed : default_seed();
    cfg.mode = mode == "nearest-axis" ? ForwardingMode::NearestAxis : ForwardingMode::CacheAware;
    validate(cfg);
    return cfg;
  }
};

Rational theoretical(const SimConfig& cfg) {
  return ForwardingContext(cfg.grid, cfg.producer, cfg.placement, cfg.mode).static_average_path();
}

struct SimulateCommand {
  std::string placement_path;
  PlacementOptions placement;
  SimulationOptions sim;
  std::string out_dir;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("simulate", "Run the NDN simulation for one placement");
    cmd->add_option("--placement", placement_path, "Placement JSON written by `optimize`");
    placement.add_to(*cmd, false);
    sim.add_to(*cmd);
    cmd->add_option("--out-dir", out_dir, "Write per_node_tx.csv, requests.csv and summary.json here");
  }

  int run(std::ostream& out) const {
    PlacementFile pf{GridSpec(2, 2), AxesPlacement{}};
    if (!placement_path.empty()) {
      if (!placement.grid.empty() || placement.caches || placement.r || placement.network_budget) {
        throw InvalidArgument("--placement cannot be combined with inline placement options");
      }
      pf = read_placement(placement_path);
    } else {
      if (placement.grid.empty()) throw InvalidArgument("give --placement FILE or --grid with placement options");
      pf.grid = GridSpec::parse(placement.grid);
      pf.placement = placement.resolve(pf.grid);
    }
    const SimConfig cfg = sim.config(pf.grid, pf.placement);
    const std::vector<SimMetrics> runs = run_replications(cfg);
    const SimSummary s = summarize(runs);
    const Rational static_avg = theoretical(cfg);
    const Rational quadrant_avg = placement_report(cfg.placement, cfg.grid).average_distance;

    out << "grid " << cfg.grid.to_string() << '\n';
    out << "placement " << describe(cfg.placement) << '\n';
    out << "clients " << cfg.num_clients << " duration " << format_double(cfg.duration) << " replications "
        << cfg.replications << " seed " << cfg.rng_seed << '\n';
    out << "mean_path_len " << format_double(s.grand_mean) << '\n';
    out << "stdev_path_len " << (s.stdev ? format_double(*s.stdev) : "n/a") << '\n';
    out << "theoretical_static_average " << format_double(static_avg.value()) << '\n';
    out << "theoretical_quadrant_average " << format_double(quadrant_avg.value()) << '\n';
    out << "producer_hits " << s.producer_hits << " cache_hits " << s.cache_hits << " coalesced "
        << s.coalesced_requests << '\n';

    if (!out_dir.empty()) {
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      {
        auto f = open_output(dir / "per_node_tx.csv");
        write_per_node_csv(f, cfg.grid, s.per_node_tx);
      }
      {
        auto f = open_output(dir / "requests.csv");
        write_requests_csv(f, runs);
      }
      json doc;
      doc["version"] = 1;
      doc["placement"] = json::parse(placement_to_json({cfg.grid, cfg.placement}));
      doc["producer"] = {cfg.producer.x, cfg.producer.y};
      doc["clients"] = cfg.num_clients;
      doc["duration"] = cfg.duration;
      doc["hop_latency"] = cfg.hop_latency;
      doc["replications"] = cfg.replications;
      doc["seed"] = cfg.rng_seed;
      doc["mode"] = sim.mode;
      doc["mean_path_len"] = s.grand_mean;
      doc["stdev_path_len"] = optional_number(s.stdev);
      doc["replication_means"] = s.replication_means;
      doc["producer_hits"] = s.producer_hits;
      doc["cache_hits"] = s.cache_hits;
      doc["coalesced_requests"] = s.coalesced_requests;
      doc["theoretical_static_average"] = static_avg.value();
      doc["theoretical_quadrant_average"] = quadrant_avg.value();
      auto f = open_output(dir / "summary.json");
      f << doc.dump(2) << '\n';
      out << "wrote " << dir.string() << '\n';
    }
    return kOk;
  }
};

// --- sweep ----------------------------------------------------------------

struct SweepCommand {
  std::string axis;
  std::string values;
  std::string grid = "60x42";
  std::string caches = "0";
  SimulationOptions sim;
  std::string out_path;

  void add_to(CLI::App& app) {
    auto* cmd = app.add_subcommand("sweep", "Sweep clients, duration or cache budget; long-format CSV");
    cmd->add_option("--axis", axis, "clients, duration or budget")
        ->required()
        ->check(CLI::IsMember({"clients", "duration", "budget"}));
    cmd->add_option("--values", values, "Comma-separated sweep values (may be empty)")->required();
    cmd->add_option("--grid", grid, "Constellation as PLANESxSATS");
    cmd->add_option("--caches", caches, "Comma-separated axes caches per quadrant (clients/duration sweeps)");
    sim.add_to(*cmd);
    cmd->add_option("--out", out_path, "CSV output file (default: stdout)");
  }

  int run(std::ostream& out) const {
    const GridSpec g = GridSpec::parse(grid);
    const std::vector<double> points = parse_values(values);
    std::vector<int> cache_counts;
    for (double c : parse_values(caches)) cache_counts.push_back(static_cast<int>(as_integer(c, "--caches")));

    std::ofstream file;
    if (!out_path.empty()) file = open_output(out_path);
    std::ostream& csv = out_path.empty() ? out : file;
    csv << "# gridcache sweep v1\n";
    csv << "sweep_var,value,strategy,caches,replication,status,mean_path_len,theoretical,quadrant_average,"
           "reduction\n";
    const double baseline = baseline_average(g).value();

    auto emit_runs = [&](double value, Strategy strategy, int64_t cache_label, const SimConfig& cfg) {
      const Rational quadrant = placement_report(cfg.placement, g).average_distance;
      const double reduction = baseline > 0 ? 1.0 - quadrant.value() / baseline : 0.0;
      const std::string tail = format_double(theoretical(cfg).value()) + ',' +
                               format_double(quadrant.value()) + ',' + format_double(reduction);
      const auto runs = run_replications(cfg);
      for (const SimMetrics& m : runs) {
        csv << axis << ',' << format_double(value) << ',' << to_string(strategy) << ',' << cache_label << ','
            << m.requests.front().replication << ",ok," << format_double(m.mean_path_len()) << ',' << tail
            << '\n';
      }
    };

    for (const double value : points) {
      if (axis == "budget") {
        const int64_t budget[] = {as_integer(value, "budget")};
        for (const StrategyRow& row : compare_strategies(g, budget)) {
          if (!row.reachable) {
            for (int r = 0; r < sim.replications; ++r) {
              csv << axis << ',' << format_double(value) << ',' << to_string(row.strategy) << ',' << budget[0]
                  << ',' << r << ",unreachable,,,,\n";
            }
            continue;
          }
          emit_runs(value, row.strategy, budget[0], sim.config(g, *row.placement));
        }
        continue;
      }
      for (const int n : cache_counts) {
        SimConfig cfg = sim.config(g, optimize_axes_placement(g, n));
        if (axis == "clients") {
          cfg.num_clients = static_cast<int>(as_integer(value, "clients"));
        } else {
          cfg.duration = value;
        }
        validate(cfg);
        emit_runs(value, Strategy::Axes, n, cfg);
      }
    }
    return kOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cache placement and NDN simulation for grid LEO constellations", "gridcache"};
  app.require_subcommand(1);
  OptimizeCommand optimize;
  OracleCommand oracle;
  SimulateCommand simulate;
  SweepCommand sweep;
  optimize.add_to(app);
  oracle.add_to(app);
  simulate.add_to(app);
  sweep.add_to(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArguments;
  }

  try {
    if (app.got_subcommand("optimize")) return optimize.run(out);
    if (app.got_subcommand("oracle")) return oracle.run(out);
    if (app.got_subcommand("simulate")) return simulate.run(out);
    return sweep.run(out);
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "runtime failure: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

}  // namespace gridcache::cli
