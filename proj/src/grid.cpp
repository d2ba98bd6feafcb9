#include "gridcache/grid.hpp"

#include <algorithm>
#include <charconv>

#include "gridcache/error.hpp"

namespace gridcache {

namespace {

int64_t mod(int64_t a, int64_t m) {
  const int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Signed component in (-m/2, m/2], ties to the positive side.
int signed_component(int a, int center, int m) {
  const int fwd = static_cast<int>(mod(int64_t{a} - center, m));
  const int back = m - fwd;
  if (fwd == 0) return 0;
  return fwd <= back ? fwd : -back;
}

}  // namespace

GridSpec::GridSpec(int planes, int sats_per_plane)
    : planes_(planes), sats_(sats_per_plane) {
  if (planes < 2 || sats_per_plane < 2) {
    throw InvalidArgument("grid dimensions must both be >= 2, got " +
                          std::to_string(planes) + "x" +
                          std::to_string(sats_per_plane));
  }
}

GridSpec GridSpec::parse(std::string_view text) {
  const auto sep = text.find_first_of("xX");
  if (sep == std::string_view::npos) {
    throw ParseError("grid must look like PLANESxSATS, got '" +
                     std::string(text) + "'");
  }
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc{} || ptr != end || part.empty()) {
      throw ParseError("bad grid dimension '" + std::string(part) + "'");
    }
    return value;
  };
  return GridSpec(parse_int(text.substr(0, sep)), parse_int(text.substr(sep + 1)));
}

Coord GridSpec::wrap(int64_t x, int64_t y) const {
  return {static_cast<int>(mod(x, planes_)), static_cast<int>(mod(y, sats_))};
}

std::string GridSpec::to_string() const {
  return std::to_string(planes_) + "x" + std::to_string(sats_);
}

int modular_distance(Coord a, Coord b, const GridSpec& g) {
  const auto ring = [](int p, int q, int m) {
    const int fwd = static_cast<int>(mod(int64_t{p} - q, m));
    return std::min(fwd, m - fwd);
  };
  return ring(a.x, b.x, g.planes()) + ring(a.y, b.y, g.sats_per_plane());
}

Offset normalize_offset(Coord node, Coord center, const GridSpec& g) {
  return {signed_component(node.x, center.x, g.planes()),
          signed_component(node.y, center.y, g.sats_per_plane())};
}

Coord apply_offset(Coord center, Offset off, const GridSpec& g) {
  return g.wrap(int64_t{center.x} + off.dx, int64_t{center.y} + off.dy);
}

std::array<Coord, 4> neighbors(Coord node, const GridSpec& g) {
  return {g.wrap(node.x + 1, node.y), g.wrap(node.x - 1, node.y),
          g.wrap(node.x, node.y + 1), g.wrap(node.x, node.y - 1)};
}

}  // namespace gridcache
