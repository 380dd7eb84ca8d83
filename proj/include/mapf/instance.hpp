/*
 * One-shot problem instances and MovingAI .scen handling.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mapf/dist_table.hpp"
#include "mapf/grid.hpp"

namespace mapf {

struct ScenParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnreachableGoal : std::runtime_error {
  int agent;
  UnreachableGoal(int agent_, const std::string& msg) : std::runtime_error(msg), agent(agent_) {}
};

struct Instance {
  const GridMap* map = nullptr;
  std::vector<int32_t> starts;
  std::vector<int32_t> goals;

  int n() const { return static_cast<int>(starts.size()); }
};

// starts pairwise distinct, goals pairwise distinct, everything passable
void check_instance(const Instance& ins);

// first n rows of a MovingAI .scen file; columns are
// bucket map width height start_x start_y goal_x goal_y optimal
Instance parse_scen(std::string_view text, const GridMap& map, int n);

std::string serialize_scen(const Instance& ins, std::string_view map_name);

// starts sampled uniformly without replacement over passable cells,
// goals likewise and independently; deterministic per seed
Instance random_instance(const GridMap& map, int n, uint64_t seed);

// sum over agents of dist(s_i, g_i); throws UnreachableGoal naming the agent
int64_t soc_lower_bound(const Instance& ins, DistanceCache& cache);
int64_t soc_lower_bound(const Instance& ins);

}  // namespace mapf
