#include "mapf/instance.hpp"

#include <sstream>
#include <unordered_set>

#include "mapf/rng.hpp"

namespace mapf {

void check_instance(const Instance& ins)
{
  if (ins.map == nullptr) throw ScenParseError("instance has no map");
  const int n = ins.n();
  if (n < 1 || ins.goals.size() != ins.starts.size()) {
    throw ScenParseError("instance needs >= 1 agent with matching starts/goals");
  }
  std::unordered_set<int32_t> seen_s, seen_g;
  for (int i = 0; i < n; ++i) {
    if (ins.starts[i] < 0 || ins.starts[i] >= ins.map->num_vertices() || ins.goals[i] < 0 ||
        ins.goals[i] >= ins.map->num_vertices()) {
      throw ScenParseError("agent " + std::to_string(i) + ": vertex out of range");
    }
    if (!seen_s.insert(ins.starts[i]).second) {
      throw ScenParseError("agent " + std::to_string(i) + ": duplicate start");
    }
    if (!seen_g.insert(ins.goals[i]).second) {
      throw ScenParseError("agent " + std::to_string(i) + ": duplicate goal");
    }
  }
}

Instance parse_scen(std::string_view text, const GridMap& map, int n)
{
  if (n < 1) throw ScenParseError("agent count must be >= 1");
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("version", 0) != 0) {
    throw ScenParseError("scen parse error: missing 'version' header");
  }
  Instance ins;
  ins.map = &map;
  int row = 1;
  while (static_cast<int>(ins.starts.size()) < n && std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::istringstream fields(line);
    std::string bucket, map_name;
    int w = 0, h = 0, sx = 0, sy = 0, gx = 0, gy = 0;
    double optimal = 0.0;
    if (!(fields >> bucket >> map_name >> w >> h >> sx >> sy >> gx >> gy >> optimal)) {
      throw ScenParseError("scen parse error at line " + std::to_string(row) +
                           ": expected 9 fields");
    }
    if (w != map.width() || h != map.height()) {
      throw ScenParseError("scen parse error at line " + std::to_string(row) +
                           ": map dimensions mismatch");
    }
    const int32_t s = map.id_at(sx, sy);
    const int32_t g = map.id_at(gx, gy);
    if (s < 0 || g < 0) {
      throw ScenParseError("scen parse error at line " + std::to_string(row) +
                           ": start or goal on a blocked cell");
    }
    ins.starts.push_back(s);
    ins.goals.push_back(g);
  }
  if (static_cast<int>(ins.starts.size()) < n) {
    throw ScenParseError("scen file has only " + std::to_string(ins.starts.size()) +
                         " usable rows, " + std::to_string(n) + " requested");
  }
  check_instance(ins);
  return ins;
}

std::string serialize_scen(const Instance& ins, std::string_view map_name)
{
  std::ostringstream out;
  out << "version 1\n";
  for (int i = 0; i < ins.n(); ++i) {
    const Cell s = ins.map->coord_of(ins.starts[i]);
    const Cell g = ins.map->coord_of(ins.goals[i]);
    out << 0 << '\t' << map_name << '\t' << ins.map->width() << '\t' << ins.map->height() << '\t'
        << s.x << '\t' << s.y << '\t' << g.x << '\t' << g.y << '\t' << 0 << '\n';
  }
  return out.str();
}

namespace {

// partial Fisher-Yates over the vertex ids; O(n) and order-stable
std::vector<int32_t> sample_distinct(const GridMap& map, int n, Rng& rng)
{
  const int v = map.num_vertices();
  std::vector<int32_t> ids(v);
  for (int i = 0; i < v; ++i) ids[i] = i;
  std::vector<int32_t> out(n);
  for (int i = 0; i < n; ++i) {
    const auto j = static_cast<int>(rng.uniform_int(i, v - 1));
    std::swap(ids[i], ids[j]);
    out[i] = ids[i];
  }
  return out;
}

}  // namespace

Instance random_instance(const GridMap& map, int n, uint64_t seed)
{
  if (n < 1 || n > map.num_vertices()) {
    throw ScenParseError("agent count " + std::to_string(n) + " exceeds |V| = " +
                         std::to_string(map.num_vertices()));
  }
  Rng rng(seed);
  Instance ins;
  ins.map = &map;
  ins.starts = sample_distinct(map, n, rng);
  ins.goals = sample_distinct(map, n, rng);
  return ins;
}

int64_t soc_lower_bound(const Instance& ins, DistanceCache& cache)
{
  int64_t sum = 0;
  for (int i = 0; i < ins.n(); ++i) {
    const int32_t d = cache.dist(ins.starts[i], ins.goals[i]);
    if (d == kUnreachable) {
      throw UnreachableGoal(i, "agent " + std::to_string(i) + ": goal unreachable from start");
    }
    sum += d;
  }
  return sum;
}

int64_t soc_lower_bound(const Instance& ins)
{
  DistanceCache cache(*ins.map);
  return soc_lower_bound(ins, cache);
}

}  // namespace mapf
