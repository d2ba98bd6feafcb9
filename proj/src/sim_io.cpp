#include <ostream>

#include "gridcache/format.hpp"
#include "gridcache/ndn_sim.hpp"

namespace gridcache {

void write_per_node_csv(std::ostream& out, const GridSpec& grid, std::span<const int64_t> per_node_tx) {
  out << "# gridcache per_node_tx v1\n";
  out << "x,y,tx_count\n";
  for (int64_t i = 0; i < grid.node_count(); ++i) {
    const Coord c = grid.coord(i);
    out << c.x << ',' << c.y << ',' << per_node_tx[i] << '\n';
  }
}

void write_requests_csv(std::ostream& out, std::span<const SimMetrics> runs) {
  out << "# gridcache requests v1\n";
  out << "replication,consumer_x,consumer_y,t_request,path_len,satisfied_by\n";
  for (const SimMetrics& m : runs) {
    for (const RequestRecord& r : m.requests) {
      out << r.replication << ',' << r.consumer.x << ',' << r.consumer.y << ','
          << format_double(r.t_request) << ',' << r.path_len << ',' << to_string(r.satisfied_by) << '\n';
    }
  }
}

}  // namespace gridcache
