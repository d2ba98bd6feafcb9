#include "gridcache/placement_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gridcache {

using nlohmann::json;

std::string placement_to_json(const PlacementFile& f) {
  json doc;
  doc["version"] = 1;
  doc["grid"] = {{"planes", f.grid.planes()}, {"sats_per_plane", f.grid.sats_per_plane()}};
  if (const auto* axes = std::get_if<AxesPlacement>(&f.placement)) {
    doc["strategy"] = "axes";
    doc["h_axis"] = axes->h_axis;
    doc["v_axis"] = axes->v_axis;
  } else {
    doc["strategy"] = "regular";
    doc["r"] = std::get<RegularPlacement>(f.placement).r;
  }
  return doc.dump(2) + "\n";
}

PlacementFile placement_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("placement file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.contains("version") && doc.at("version").get<int>() != 1) {
      throw ParseError("unsupported placement file version " + doc.at("version").dump());
    }
    const auto& grid = doc.at("grid");
    PlacementFile f{GridSpec(grid.at("planes").get<int>(), grid.at("sats_per_plane").get<int>()),
                    AxesPlacement{}};
    const auto strategy = doc.at("strategy").get<std::string>();
    if (strategy == "axes") {
      f.placement = AxesPlacement{doc.value("h_axis", std::vector<int>{}),
                                  doc.value("v_axis", std::vector<int>{})};
    } else if (strategy == "regular") {
      f.placement = RegularPlacement{doc.at("r").get<int>()};
    } else {
      throw ParseError("unknown strategy '" + strategy + "'");
    }
    validate(f.placement, f.grid);
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed placement file: ") + e.what());
  }
}

void write_placement(const std::filesystem::path& path, const PlacementFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << placement_to_json(f);
}

PlacementFile read_placement(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read placement file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return placement_from_json(buf.str());
}

}  // namespace gridcache
