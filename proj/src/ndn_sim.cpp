#include "gridcache/ndn_sim.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "gridcache/error.hpp"

namespace gridcache {

void validate(const SimConfig& cfg) {
  validate(cfg.placement, cfg.grid);
  if (!cfg.grid.contains(cfg.producer)) throw InvalidArgument("producer outside grid");
  if (cfg.num_clients < 1) throw InvalidArgument("num_clients must be >= 1");
  if (!(cfg.duration >= 0.0) || !std::isfinite(cfg.duration)) {
    throw InvalidArgument("duration must be a finite value >= 0");
  }
  if (!(cfg.hop_latency > 0.0) || !std::isfinite(cfg.hop_latency)) {
    throw InvalidArgument("hop_latency must be > 0");
  }
  if (cfg.replications < 1) throw InvalidArgument("replications must be >= 1");
}

uint64_t replication_seed(uint64_t master, int replication) {
  uint64_t z = master + 0x9E3779B97F4A7C15ULL * (static_cast<uint64_t>(replication) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below(0)");
  // Reject the top partial block so every residue is equally likely.
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<ScheduledRequest> schedule_requests(const SimConfig& cfg, uint64_t seed) {
  Rng rng(seed);
  std::vector<ScheduledRequest> out;
  out.reserve(cfg.num_clients);
  for (int i = 0; i < cfg.num_clients; ++i) {
    const Coord node = cfg.grid.coord(static_cast<int64_t>(rng.below(cfg.grid.node_count())));
    const double t = cfg.duration == 0.0 ? 0.0 : cfg.duration * rng.unit();
    out.push_back({t, node});
  }
  return out;
}

std::string to_string(SatisfiedBy s) {
  switch (s) {
    case SatisfiedBy::Producer: return "producer";
    case SatisfiedBy::Cache: return "cache";
    case SatisfiedBy::Coalesced: return "coalesced";
  }
  return "?";
}

double SimMetrics::mean_path_len() const {
  if (requests.empty()) return 0.0;
  int64_t total = 0;
  for (const auto& r : requests) total += r.path_len;
  return static_cast<double>(total) / static_cast<double>(requests.size());
}

namespace {

constexpr int kLocalFace = 4;

enum class EventKind { Interest, Data };

struct Event {
  double time;
  uint64_t seq;
  EventKind kind;
  int node;
  int face;  // arrival face at `node`: neighbor direction or kLocalFace
  int request;
  int hops;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

struct PitEntry {
  uint8_t faces = 0;  // bit k: neighbor direction k
  std::vector<int> local_requests;
  double created = 0.0;
};

class Simulation {
 public:
  Simulation(const SimConfig& cfg, int replication)
      : cfg_(cfg), replication_(replication), ctx_(cfg.grid, cfg.producer, cfg.placement, cfg.mode) {
    const int64_t n = cfg.grid.node_count();
    designated_.resize(n);
    holds_data_.resize(n);
    next_hop_.resize(n, -1);
    upstream_.resize(n, -1);
    neighbor_.resize(n);
    pit_.resize(n);
    for (int64_t i = 0; i < n; ++i) {
      const Coord c = cfg.grid.coord(i);
      const Offset off = ctx_.offset_of(c);
      const bool producer = c == cfg.producer;
      designated_[i] = ctx_.is_cache(off);
      holds_data_[i] = producer;
      if (!producer) {
        upstream_[i] = static_cast<int>(cfg.grid.index(ctx_.coord_of(ctx_.forward_past(off))));
        if (!designated_[i]) next_hop_[i] = static_cast<int>(cfg.grid.index(ctx_.coord_of(ctx_.next_hop(off))));
      }
      const auto nb = neighbors(c, cfg.grid);
      for (int k = 0; k < 4; ++k) neighbor_[i][k] = static_cast<int>(cfg.grid.index(nb[k]));
    }
    metrics_.per_node_tx.assign(n, 0);
  }

  SimMetrics run() {
    const auto schedule = schedule_requests(cfg_, replication_seed(cfg_.rng_seed, replication_));
    metrics_.requests.resize(schedule.size());
    delivered_.assign(schedule.size(), 0);
    for (std::size_t r = 0; r < schedule.size(); ++r) {
      auto& rec = metrics_.requests[r];
      rec.replication = replication_;
      rec.consumer = schedule[r].consumer;
      rec.t_request = schedule[r].time;
      push({schedule[r].time, 0, EventKind::Interest, static_cast<int>(cfg_.grid.index(rec.consumer)),
            kLocalFace, static_cast<int>(r), 0});
    }
    while (!queue_.empty()) {
      const Event e = queue_.top();
      queue_.pop();
      if (e.kind == EventKind::Interest) {
        on_interest(e);
      } else {
        on_data(e);
      }
    }
    for (const auto& entry : pit_) metrics_.pit_entries_left += entry.has_value();
    for (const auto d : delivered_) metrics_.undelivered += d == 0;
    return std::move(metrics_);
  }

 private:
  void push(Event e) {
    e.seq = seq_++;
    queue_.push(e);
  }

  // Face of `to` that leads back to `from`.
  int face_towards(int to, int from) const {
    for (int k = 0; k < 4; ++k) {
      if (neighbor_[to][k] == from) return k;
    }
    throw ContractViolation("packet sent between non-adjacent nodes");
  }

  void transmit(EventKind kind, int from, int to, double now, int request, int hops) {
    ++metrics_.per_node_tx[from];
    ++(kind == EventKind::Interest ? metrics_.interest_tx : metrics_.data_tx);
    push({now + cfg_.hop_latency, 0, kind, to, face_towards(to, from), request, hops});
  }

  void deliver(int request, double now) {
    if (delivered_[request]++ > 0) ++metrics_.duplicate_deliveries;
    metrics_.requests[request].t_delivered = now;
  }

  void on_interest(const Event& e) {
    auto& rec = metrics_.requests[e.request];
    if (holds_data_[e.node]) {
      const bool producer = cfg_.grid.coord(e.node) == cfg_.producer;
      if (!producer && !designated_[e.node]) ++metrics_.storage_violations;
      rec.path_len = e.hops;
      rec.satisfied_by = producer ? SatisfiedBy::Producer : SatisfiedBy::Cache;
      ++(producer ? metrics_.producer_hits : metrics_.cache_hits);
      if (e.face == kLocalFace) {
        deliver(e.request, e.time);
      } else {
        transmit(EventKind::Data, e.node, neighbor_[e.node][e.face], e.time, e.request, 0);
      }
      return;
    }
    auto& entry = pit_[e.node];
    if (entry) {
      add_face(*entry, e);
      rec.path_len = e.hops;
      rec.satisfied_by = SatisfiedBy::Coalesced;
      ++metrics_.coalesced_requests;
      return;
    }
    entry.emplace();
    entry->created = e.time;
    add_face(*entry, e);
    ++metrics_.pit_entries_created;
    const int next = designated_[e.node] ? upstream_[e.node] : next_hop_[e.node];
    transmit(EventKind::Interest, e.node, next, e.time, e.request, e.hops + 1);
  }

  static void add_face(PitEntry& entry, const Event& e) {
    if (e.face == kLocalFace) {
      entry.local_requests.push_back(e.request);
    } else {
      entry.faces |= static_cast<uint8_t>(1U << e.face);
    }
  }

  void on_data(const Event& e) {
    auto& entry = pit_[e.node];
    if (!entry) throw ContractViolation("Data reached a node without a PIT entry");
    if (designated_[e.node]) holds_data_[e.node] = 1;
    for (int k = 0; k < 4; ++k) {
      if (entry->faces >> k & 1U) transmit(EventKind::Data, e.node, neighbor_[e.node][k], e.time, -1, 0);
    }
    for (int r : entry->local_requests) deliver(r, e.time);
    entry.reset();
  }

  const SimConfig& cfg_;
  int replication_;
  ForwardingContext ctx_;
  std::vector<char> designated_;
  std::vector<char> holds_data_;
  std::vector<int> next_hop_;   // for nodes that are neither producer nor cache
  std::vector<int> upstream_;   // for a cache that misses
  std::vector<std::array<int, 4>> neighbor_;
  std::vector<std::optional<PitEntry>> pit_;
  std::vector<int> delivered_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  uint64_t seq_ = 0;
  SimMetrics metrics_;
};

}  // namespace

SimMetrics run_simulation(const SimConfig& cfg, int replication) {
  validate(cfg);
  return Simulation(cfg, replication).run();
}

SimSummary summarize(std::span<const SimMetrics> runs) {
  if (runs.empty()) throw InvalidArgument("summarize needs at least one replication");
  SimSummary s;
  s.per_node_tx.assign(runs.front().per_node_tx.size(), 0);
  for (const SimMetrics& m : runs) {
    s.replication_means.push_back(m.mean_path_len());
    for (std::size_t i = 0; i < m.per_node_tx.size(); ++i) s.per_node_tx[i] += m.per_node_tx[i];
    s.cache_hits += m.cache_hits;
    s.producer_hits += m.producer_hits;
    s.coalesced_requests += m.coalesced_requests;
    s.requests += static_cast<int64_t>(m.requests.size());
  }
  const double n = static_cast<double>(runs.size());
  s.grand_mean = std::accumulate(s.replication_means.begin(), s.replication_means.end(), 0.0) / n;
  if (runs.size() > 1) {
    double ss = 0.0;
    for (double m : s.replication_means) ss += (m - s.grand_mean) * (m - s.grand_mean);
    s.stdev = std::sqrt(ss / (n - 1.0));
    s.standard_error = *s.stdev / std::sqrt(n);
  }
  return s;
}

std::vector<SimMetrics> run_replications(const SimConfig& cfg) {
  validate(cfg);
  std::vector<SimMetrics> out;
  out.reserve(cfg.replications);
  for (int r = 0; r < cfg.replications; ++r) out.push_back(Simulation(cfg, r).run());
  return out;
}

}  // namespace gridcache
