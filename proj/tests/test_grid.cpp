#include <string>

#include "doctest.h"
#include "mapf/dist_table.hpp"
#include "mapf/grid.hpp"
#include "mapf/rng.hpp"
#include "oracles.hpp"

using namespace mapf;

namespace {

GridMap open_map(int rows, int cols) { return generate_empty_map(rows, cols); }

std::string map_text(int h, int w, const std::string& rows)
{
  std::string out = "type octile\nheight " + std::to_string(h) + "\nwidth " + std::to_string(w) +
                    "\nmap\n";
  return out + rows;
}

}  // namespace

TEST_CASE("parse: 2x2 all-open map")
{
  const GridMap g = GridMap::parse(map_text(2, 2, "..\n..\n"));
  CHECK(g.num_vertices() == 4);
  CHECK(g.max_degree() == 2);
}

TEST_CASE("parse: 3x3 with blocked center")
{
  const GridMap g = GridMap::parse(map_text(3, 3, "...\n.@.\n...\n"));
  CHECK(g.num_vertices() == 8);
  CHECK(g.id_at(1, 1) == -1);
}

TEST_CASE("parse: G and T/O characters, trailing whitespace")
{
  const GridMap g = GridMap::parse(map_text(2, 3, ".GT\nO@.\r\n"));
  CHECK(g.num_vertices() == 3);
  CHECK(g.passable(1, 0));
  CHECK_FALSE(g.passable(2, 0));
  CHECK_FALSE(g.passable(0, 1));
}

TEST_CASE("parse errors name the offending line")
{
  CHECK_THROWS_WITH_AS(GridMap::parse("type quad\nheight 2\nwidth 2\nmap\n..\n..\n"),
                       doctest::Contains("line 1"), MapParseError);
  CHECK_THROWS_WITH_AS(GridMap::parse(map_text(2, 2, "..\n.\n")),
                       doctest::Contains("line 6"), MapParseError);
  CHECK_THROWS_WITH_AS(GridMap::parse(map_text(3, 2, "..\n..\n")),
                       doctest::Contains("grid rows"), MapParseError);
  CHECK_THROWS_AS(GridMap::parse(map_text(2, 2, "..\n.x\n")), MapParseError);
}

TEST_CASE("neighbors: degrees and fixed enumeration order")
{
  const GridMap g = open_map(3, 3);
  const int32_t center = g.id_at(1, 1);
  const auto nb = g.neighbors(center);
  REQUIRE(nb.size() == 4);
  // up, down, left, right
  CHECK(nb[0] == g.id_at(1, 0));
  CHECK(nb[1] == g.id_at(1, 2));
  CHECK(nb[2] == g.id_at(0, 1));
  CHECK(nb[3] == g.id_at(2, 1));

  CHECK(g.neighbors(g.id_at(0, 0)).size() == 2);

  const GridMap walled = GridMap::parse(map_text(3, 3, "@.@\n@.@\n@@@\n"));
  CHECK(walled.neighbors(walled.id_at(1, 1)).size() == 1);
  const GridMap isolated = GridMap::parse(map_text(3, 3, "@@@\n@.@\n@@@\n"));
  CHECK(isolated.neighbors(isolated.id_at(1, 1)).empty());
}

TEST_CASE("neighbors are symmetric")
{
  const GridMap g = generate_random_map(8, 8, 12, 7);
  for (int32_t v = 0; v < g.num_vertices(); ++v) {
    for (const int32_t u : g.neighbors(v)) {
      bool back = false;
      for (const int32_t w : g.neighbors(u)) back |= (w == v);
      CHECK(back);
    }
  }
}

TEST_CASE("distance table: identity, open grid, detour around center")
{
  const GridMap g = open_map(3, 3);
  DistanceCache cache(g);
  const int32_t goal = g.id_at(2, 2);
  CHECK(cache.dist(goal, goal) == 0);
  CHECK(cache.dist(g.id_at(0, 0), goal) == 4);

  const GridMap blocked = GridMap::parse(map_text(3, 3, "...\n.@.\n...\n"));
  DistanceCache cache2(blocked);
  CHECK(cache2.dist(blocked.id_at(0, 0), blocked.id_at(2, 2)) == 4);
}

TEST_CASE("distance table: unreachable sentinel and local consistency")
{
  const GridMap g = GridMap::parse(map_text(3, 3, "..@\n.@.\n@..\n"));
  const int32_t goal = g.id_at(0, 0);
  const auto table = build_distance_table(g, goal);
  CHECK(table.dist[g.id_at(1, 2)] == kUnreachable);
  CHECK(table.dist[g.id_at(2, 2)] == kUnreachable);
  for (int32_t v = 0; v < g.num_vertices(); ++v) {
    if (table.dist[v] == kUnreachable || v == goal) continue;
    bool has_descent = false;
    for (const int32_t u : g.neighbors(v)) {
      CHECK(std::abs(table.dist[u] - table.dist[v]) <= 1);
      has_descent |= (table.dist[u] == table.dist[v] - 1);
    }
    CHECK(has_descent);
  }
}

TEST_CASE("distance tables match Floyd-Warshall on small random maps")
{
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const GridMap g = generate_random_map(5 + seed % 4, 8, 10, seed);
    const auto ref = oracle::all_pairs(g);
    DistanceCache cache(g);
    for (int32_t goal = 0; goal < g.num_vertices(); ++goal) {
      const auto& table = cache.table(goal);
      for (int32_t v = 0; v < g.num_vertices(); ++v) {
        const int64_t want = ref[v][goal] >= 1'000'000'000 ? kUnreachable : ref[v][goal];
        CHECK(table.dist[v] == want);
      }
    }
  }
}

TEST_CASE("distance cache: LRU cap evicts, unbounded keeps")
{
  const GridMap g = open_map(4, 4);
  DistanceCache capped(g, 3);
  for (int32_t goal = 0; goal < 8; ++goal) capped.table(goal);
  CHECK(capped.size() == 3);
  DistanceCache unbounded(g);
  for (int32_t goal = 0; goal < 8; ++goal) unbounded.table(goal);
  CHECK(unbounded.size() == 8);
}

TEST_CASE("map serialize/parse round-trips the passable mask")
{
  const GridMap g = generate_random_map(9, 7, 11, 3);
  const GridMap g2 = GridMap::parse(g.serialize());
  REQUIRE(g2.width() == g.width());
  REQUIRE(g2.height() == g.height());
  for (int y = 0; y < g.height(); ++y) {
    for (int x = 0; x < g.width(); ++x) CHECK(g.passable(x, y) == g2.passable(x, y));
  }
  CHECK(g2.serialize() == g.serialize());
}

TEST_CASE("sortation map: lattice pattern, counts, connectivity")
{
  const GridMap g5 = generate_sortation_map(5, 5);
  CHECK(g5.num_vertices() == 21);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) CHECK(g5.passable(x, y) == !(x % 2 == 1 && y % 2 == 1));
  }
  CHECK(g5.connected());

  const GridMap g3 = generate_sortation_map(3, 3);
  CHECK(g3.num_vertices() == 8);
  CHECK_FALSE(g3.passable(1, 1));

  CHECK(generate_sortation_map(11, 14).connected());
  CHECK_THROWS_AS(generate_sortation_map(2, 5), MapParseError);
}

TEST_CASE("random map generator: exact obstacle budget, connected, deterministic")
{
  const GridMap a = generate_random_map(12, 12, 30, 42);
  const GridMap b = generate_random_map(12, 12, 30, 42);
  CHECK(a.serialize() == b.serialize());
  CHECK(a.num_vertices() == 12 * 12 - 30);
  CHECK(a.connected());
}

TEST_CASE("warehouse map generator: shelves blocked, aisles connected")
{
  const GridMap g = generate_warehouse_map(40, 60);
  CHECK(g.connected());
  CHECK(g.num_vertices() < 40 * 60);
  CHECK_FALSE(g.passable(4, 4));  // first shelf corner
}
