#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gridcache/cli.hpp"
#include "gridcache/error.hpp"
#include "gridcache/forwarding.hpp"
#include "gridcache/ndn_sim.hpp"
#include "gridcache/optimizer.hpp"
#include "gridcache/placement_io.hpp"
#include "gridcache/strategies.hpp"

namespace py = pybind11;
using namespace gridcache;

namespace {

py::dict report_dict(const PlacementReport& r) {
  py::dict d;
  d["total_cost"] = r.total_cost;
  d["average_distance"] = r.average_distance.value();
  d["average_fraction"] = py::make_tuple(r.average_distance.num, r.average_distance.den);
  d["cache_count_full_network"] = r.cache_count_full_network;
  return d;
}

Placement make_placement(const py::object& obj) {
  if (py::isinstance<AxesPlacement>(obj)) return obj.cast<AxesPlacement>();
  if (py::isinstance<RegularPlacement>(obj)) return obj.cast<RegularPlacement>();
  throw InvalidArgument("expected AxesPlacement or RegularPlacement");
}

}  // namespace

PYBIND11_MODULE(_gridcache, m) {
  m.doc() = "Cache placement and NDN simulation on torus constellations";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<int, int>(), py::arg("planes"), py::arg("sats_per_plane"))
      .def_static("parse", &GridSpec::parse)
      .def_property_readonly("planes", &GridSpec::planes)
      .def_property_readonly("sats_per_plane", &GridSpec::sats_per_plane)
      .def_property_readonly("h", &GridSpec::h)
      .def_property_readonly("v", &GridSpec::v)
      .def_property_readonly("diameter", &GridSpec::diameter)
      .def("distance",
           [](const GridSpec& g, std::pair<int, int> a, std::pair<int, int> b) {
             return modular_distance({a.first, a.second}, {b.first, b.second}, g);
           })
      .def("__repr__", [](const GridSpec& g) { return "GridSpec(" + g.to_string() + ")"; });

  py::class_<AxesPlacement>(m, "AxesPlacement")
      .def(py::init<>())
      .def(py::init([](std::vector<int> h, std::vector<int> v) { return AxesPlacement{std::move(h), std::move(v)}; }),
           py::arg("h_axis"), py::arg("v_axis"))
      .def_readwrite("h_axis", &AxesPlacement::h_axis)
      .def_readwrite("v_axis", &AxesPlacement::v_axis)
      .def("__eq__", [](const AxesPlacement& a, const AxesPlacement& b) { return a == b; })
      .def("__repr__", [](const AxesPlacement& p) { return describe(p); });

  py::class_<RegularPlacement>(m, "RegularPlacement")
      .def(py::init([](int r) { return RegularPlacement{r}; }), py::arg("r"))
      .def_readwrite("r", &RegularPlacement::r)
      .def("__repr__", [](const RegularPlacement& p) { return describe(p); });

  m.def("region_cost", &region_cost, py::arg("a1"), py::arg("a2"), py::arg("b"));
  m.def("baseline_average", [](const GridSpec& g) { return baseline_average(g).value(); });
  m.def("optimize_axes_placement", &optimize_axes_placement, py::arg("grid"), py::arg("n"));
  m.def(
      "coordinate_advance",
      [](const GridSpec& g, int n) {
        const AdvanceResult r = coordinate_advance(g, n);
        return py::make_tuple(r.placement, r.cost);
      },
      py::arg("grid"), py::arg("n"));
  m.def(
      "exhaustive_axes_placement",
      [](const GridSpec& g, int n, bool interleaved_only, int64_t budget) {
        const AxesOptimum o = exhaustive_axes_placement(g, n, {interleaved_only, budget});
        return py::make_tuple(o.placement, report_dict(o.report));
      },
      py::arg("grid"), py::arg("n"), py::arg("interleaved_only") = false,
      py::arg("budget") = ExhaustiveOptions{}.budget);
  m.def(
      "placement_report", [](const GridSpec& g, const py::object& p) { return report_dict(placement_report(make_placement(p), g)); },
      py::arg("grid"), py::arg("placement"));
  m.def(
      "static_average_path",
      [](const GridSpec& g, const py::object& p, std::pair<int, int> producer) {
        return ForwardingContext(g, {producer.first, producer.second}, make_placement(p)).static_average_path().value();
      },
      py::arg("grid"), py::arg("placement"), py::arg("producer") = std::pair<int, int>{0, 0});
  m.def(
      "compare_strategies",
      [](const GridSpec& g, const std::vector<int64_t>& budgets) {
        py::list out;
        for (const StrategyRow& row : compare_strategies(g, budgets)) {
          py::dict d;
          d["budget"] = row.budget;
          d["strategy"] = to_string(row.strategy);
          d["reachable"] = row.reachable;
          d["reason"] = row.reason;
          d["average_distance"] = row.reachable ? py::cast(row.average_distance.value()) : py::none();
          d["reduction"] = row.reachable ? py::cast(row.reduction) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("grid"), py::arg("budgets"));
  m.def(
      "simulate",
      [](const GridSpec& g, const py::object& p, int clients, double duration, int replications, uint64_t seed) {
        SimConfig cfg{g, make_placement(p)};
        cfg.num_clients = clients;
        cfg.duration = duration;
        cfg.replications = replications;
        cfg.rng_seed = seed;
        SimSummary s;
        {
          py::gil_scoped_release release;
          s = summarize(run_replications(cfg));
        }
        py::dict d;
        d["replication_means"] = s.replication_means;
        d["mean_path_len"] = s.grand_mean;
        d["stdev_path_len"] = s.stdev ? py::cast(*s.stdev) : py::none();
        d["cache_hits"] = s.cache_hits;
        d["producer_hits"] = s.producer_hits;
        d["coalesced_requests"] = s.coalesced_requests;
        d["requests"] = s.requests;
        d["per_node_tx"] = s.per_node_tx;
        return d;
      },
      py::arg("grid"), py::arg("placement"), py::arg("clients") = 1000, py::arg("duration") = 0.0,
      py::arg("replications") = 1, py::arg("seed") = 1);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "gridcache");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
