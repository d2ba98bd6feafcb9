#pragma once

// Event-driven NDN simulation of one named object served from one
// producer. Interests follow the forwarding rules hop by hop; routers keep
// a PIT entry per pending Interest and coalesce duplicates; Data retraces
// the PIT faces and designated caches keep a copy on the way back.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gridcache/forwarding.hpp"
#include "gridcache/grid.hpp"
#include "gridcache/placement.hpp"

namespace gridcache {

struct SimConfig {
  GridSpec grid{60, 42};
  Placement placement = AxesPlacement{};
  Coord producer{0, 0};
  int num_clients = 1000;
  double duration = 0.0;     // request instants are uniform over [0, duration]
  double hop_latency = 1.0;  // time per link traversal
  uint64_t rng_seed = 1;
  int replications = 1;
  ForwardingMode mode = ForwardingMode::CacheAware;
};

/// Throws InvalidArgument / Infeasible when the config cannot run.
void validate(const SimConfig& cfg);

/// Seed of replication `r`: the (r+1)-th SplitMix64 output from `master`.
uint64_t replication_seed(uint64_t master, int replication);

/// Portable draws from a 64-bit Mersenne Twister. The standard
/// distributions are implementation defined, so the mapping is done here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  /// Uniform over [0, n), rejection sampled.
  uint64_t below(uint64_t n);
  /// Uniform over [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct ScheduledRequest {
  double time = 0.0;
  Coord consumer;
};

/// One request per client: consumer uniform over all nodes (with
/// replacement), then instant uniform over [0, duration].
std::vector<ScheduledRequest> schedule_requests(const SimConfig& cfg, uint64_t seed);

enum class SatisfiedBy { Producer, Cache, Coalesced };

std::string to_string(SatisfiedBy s);

struct RequestRecord {
  int replication = 0;
  Coord consumer;
  double t_request = 0.0;
  int path_len = 0;  // Interest hops until it was answered or coalesced
  SatisfiedBy satisfied_by = SatisfiedBy::Producer;
  double t_delivered = -1.0;
  friend bool operator==(const RequestRecord&, const RequestRecord&) = default;
};

struct SimMetrics {
  std::vector<int64_t> per_node_tx;  // by GridSpec::index; Interest + Data sent
  std::vector<RequestRecord> requests;
  int64_t cache_hits = 0;
  int64_t producer_hits = 0;
  int64_t coalesced_requests = 0;
  int64_t interest_tx = 0;
  int64_t data_tx = 0;
  int64_t pit_entries_created = 0;
  int64_t pit_entries_left = 0;    // still pending after the queue drained
  int64_t undelivered = 0;         // requests whose consumer never got Data
  int64_t duplicate_deliveries = 0;
  int64_t storage_violations = 0;  // answers from storage by non-designated nodes

  double mean_path_len() const;
  friend bool operator==(const SimMetrics&, const SimMetrics&) = default;
};

/// Runs replication `replication` of `cfg`.
SimMetrics run_simulation(const SimConfig& cfg, int replication = 0);

struct SimSummary {
  std::vector<double> replication_means;
  double grand_mean = 0.0;
  std::optional<double> stdev;           // sample stdev of replication means
  std::optional<double> standard_error;  // stdev / sqrt(replications)
  std::vector<int64_t> per_node_tx;      // summed over replications
  int64_t cache_hits = 0;
  int64_t producer_hits = 0;
  int64_t coalesced_requests = 0;
  int64_t requests = 0;
};

SimSummary summarize(std::span<const SimMetrics> runs);

/// All cfg.replications runs, in replication order.
std::vector<SimMetrics> run_replications(const SimConfig& cfg);

/// Per-node transmission counts: "# gridcache per_node_tx v1" then x,y,tx_count.
void write_per_node_csv(std::ostream& out, const GridSpec& grid, std::span<const int64_t> per_node_tx);

/// One row per request of every run: "# gridcache requests v1" then
/// replication,consumer_x,consumer_y,t_request,path_len,satisfied_by.
void write_requests_csv(std::ostream& out, std::span<const SimMetrics> runs);

}  // namespace gridcache
