#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <vector>

#include "gridcache/error.hpp"
#include "gridcache/grid.hpp"

using namespace gridcache;

namespace {

// Breadth-first hop counts from `src` over the four links.
std::vector<int> bfs(const GridSpec& g, Coord src) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<Coord> q;
  dist[g.index(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const Coord c = q.front();
    q.pop();
    for (const Coord n : neighbors(c, g)) {
      if (dist[g.index(n)] < 0) {
        dist[g.index(n)] = dist[g.index(c)] + 1;
        q.push(n);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("modular distance equals BFS hop count") {
  for (const auto& g : {GridSpec(2, 2), GridSpec(3, 5), GridSpec(6, 4), GridSpec(7, 7), GridSpec(10, 6)}) {
    for (int64_t i = 0; i < g.node_count(); ++i) {
      const Coord a = g.coord(i);
      const auto dist = bfs(g, a);
      int max_d = 0;
      for (int64_t j = 0; j < g.node_count(); ++j) {
        CHECK(modular_distance(a, g.coord(j), g) == dist[j]);
        max_d = std::max(max_d, dist[j]);
      }
      CHECK(max_d == g.diameter());
    }
  }
}

TEST_CASE("normalize_offset is a shortest signed offset and apply_offset inverts it") {
  const GridSpec g(8, 5);
  const Coord center{3, 1};
  for (int64_t i = 0; i < g.node_count(); ++i) {
    const Coord c = g.coord(i);
    const Offset off = normalize_offset(c, center, g);
    CHECK(std::abs(off.dx) + std::abs(off.dy) == modular_distance(c, center, g));
    CHECK(apply_offset(center, off, g) == c);
    CHECK(off.dx > -4);
    CHECK(off.dx <= 4);
    CHECK(off.dy >= -2);
    CHECK(off.dy <= 2);
  }
  // antipodal tie on the even ring resolves to the positive side
  CHECK(normalize_offset({7, 1}, center, g).dx == 4);
}

TEST_CASE("neighbors") {
  const GridSpec g(4, 3);
  const auto n = neighbors({0, 0}, g);
  CHECK(n[0] == Coord{1, 0});
  CHECK(n[1] == Coord{3, 0});
  CHECK(n[2] == Coord{0, 1});
  CHECK(n[3] == Coord{0, 2});
  std::set<Coord> distinct(n.begin(), n.end());
  CHECK(distinct.size() == 4);
  const auto small = neighbors({0, 0}, GridSpec(2, 2));
  CHECK(small[0] == small[1]);
}

TEST_CASE("GridSpec parsing and validation") {
  const GridSpec g = GridSpec::parse("60x42");
  CHECK(g.planes() == 60);
  CHECK(g.sats_per_plane() == 42);
  CHECK(g.h() == 30);
  CHECK(g.v() == 21);
  CHECK(g.diameter() == 51);
  CHECK(g.to_string() == "60x42");
  CHECK(GridSpec::parse("5X3") == GridSpec(5, 3));
  CHECK_THROWS_AS(GridSpec(1, 5), InvalidArgument);
  CHECK_THROWS_AS(GridSpec::parse("60"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("ax4"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("4x4x4"), ParseError);
  CHECK_THROWS_AS(GridSpec::parse("1x4"), InvalidArgument);
}

TEST_CASE("index and wrap") {
  const GridSpec g(5, 3);
  for (int64_t i = 0; i < g.node_count(); ++i) CHECK(g.index(g.coord(i)) == i);
  CHECK(g.wrap(-1, -1) == Coord{4, 2});
  CHECK(g.wrap(11, 7) == Coord{1, 1});
  CHECK(g.contains({4, 2}));
  CHECK_FALSE(g.contains({5, 0}));
}
