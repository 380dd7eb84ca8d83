/*
 * Lifelong simulation: repeated one-timestep planning with immediate
 * random goal reassignment on arrival.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mapf/grid.hpp"
#include "mapf/regret.hpp"
#include "mapf/rng.hpp"
#include "mapf/strategy.hpp"

namespace mapf {

struct SimResult {
  int64_t tasks_completed = 0;
  int horizon = 0;
  std::vector<double> per_step_response_ms;  // one entry per timestep
  // recorded only with record=true: configurations q_0..q_horizon and the
  // goals active while planning each step
  std::optional<std::vector<Config>> trajectory;
  std::optional<std::vector<std::vector<int32_t>>> goals_before_step;

  double throughput() const
  {
    return horizon > 0 ? static_cast<double>(tasks_completed) / horizon : 0.0;
  }
};

// uniform over passable vertices excluding `current` (resample on equality)
int32_t assign_goal(Rng& rng, const GridMap& map, int32_t current);

SimResult run_lifelong(const GridMap& map, int n, int horizon, const StrategyConfig& strategy,
                       uint64_t seed, bool record = false);

}  // namespace mapf
