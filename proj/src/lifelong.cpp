#include "mapf/lifelong.hpp"

#include <chrono>
#include <stdexcept>

#include "mapf/config_gen.hpp"
#include "mapf/instance.hpp"

namespace mapf {

int32_t assign_goal(Rng& rng, const GridMap& map, int32_t current)
{
  const int v = map.num_vertices();
  if (v < 2) throw std::runtime_error("assign_goal needs at least 2 passable cells");
  int32_t goal;
  do {
    goal = static_cast<int32_t>(rng.below(static_cast<uint64_t>(v)));
  } while (goal == current);
  return goal;
}

SimResult run_lifelong(const GridMap& map, int n, int horizon, const StrategyConfig& strategy,
                       uint64_t seed, bool record)
{
  if (n < 1 || n > map.num_vertices()) throw std::runtime_error("agent count exceeds |V|");
  if (horizon < 1) throw std::runtime_error("horizon must be >= 1");

  Rng rng(seed);
  Config q = random_instance(map, n, rng.next_u64()).starts;
  std::vector<int32_t> goals(n);
  for (int i = 0; i < n; ++i) goals[i] = assign_goal(rng, map, q[i]);

  DistanceCache cache(map);
  PibtEngine engine(map, cache);
  PriorityState prio = PriorityState::init(n);

  SimResult result;
  result.horizon = horizon;
  result.per_step_response_ms.reserve(horizon);
  if (record) {
    result.trajectory.emplace();
    result.trajectory->push_back(q);
    result.goals_before_step.emplace();
  }

  Config q_next;
  for (int t = 0; t < horizon; ++t) {
    if (record) result.goals_before_step->push_back(goals);

    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = generate_config(engine, strategy, q, goals, prio, rng, q_next);
    const auto t1 = std::chrono::steady_clock::now();
    result.per_step_response_ms.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());
    if (!ok) throw std::logic_error("unconstrained generation failed");

    q = q_next;
    // arrivals reset their priority, then get a fresh task immediately
    update_priorities(prio, q, goals);
    for (int i = 0; i < n; ++i) {
      if (q[i] == goals[i]) {
        ++result.tasks_completed;
        goals[i] = assign_goal(rng, map, q[i]);
      }
    }
    if (record) result.trajectory->push_back(q);
  }
  return result;
}

}  // namespace mapf
