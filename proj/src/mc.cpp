#include "mapf/mc.hpp"

#include <stdexcept>

namespace mapf {

int64_t transition_cost_g(const Config& q, const Config& q_next, const std::vector<int32_t>& goals)
{
  const int n = static_cast<int>(q.size());
  int64_t cost = 0;
  for (int i = 0; i < n; ++i) {
    if (!(q[i] == q_next[i] && q_next[i] == goals[i])) ++cost;
  }
  return cost;
}

int64_t heuristic_h(const Config& q, const std::vector<int32_t>& goals, DistanceCache& cache)
{
  int64_t sum = 0;
  for (size_t i = 0; i < q.size(); ++i) {
    const int32_t d = cache.dist(q[i], goals[i]);
    if (d == kUnreachable) {
      throw std::runtime_error("heuristic_h: agent " + std::to_string(i) +
                               " cannot reach its goal");
    }
    sum += d;
  }
  return sum;
}

bool mc_step(PibtEngine& engine, const Config& q_from, const std::vector<int32_t>& goals,
             const PriorityState& prio, int k, Rng& rng, Config& q_to,
             std::span<const AgentAssignment> constraints)
{
  const uint64_t step_seed = rng.next_u64();
  const StrategyConfig plain{Strategy::Original, 1, 0.0, 1};
  Config sample;
  bool found = false;
  int64_t best_cost = 0;
  for (int j = 0; j < k; ++j) {
    Rng sample_rng(Rng::mix(step_seed, static_cast<uint64_t>(j)));
    if (!engine.step(q_from, goals, prio, plain, sample_rng, sample, constraints)) continue;
    const int64_t cost =
        transition_cost_g(q_from, sample, goals) + heuristic_h(sample, goals, engine.cache());
    if (!found || cost < best_cost) {
      found = true;
      best_cost = cost;
      q_to = sample;
    }
  }
  return found;
}

}  // namespace mapf
