#include "mapf/regret.hpp"

#include <algorithm>

#include "mapf/pibt.hpp"

namespace mapf {

void RegretTable::init(const GridMap& map, const Config& q_from)
{
  const int n = static_cast<int>(q_from.size());
  cand_.resize(n);
  value_.resize(n);
  count_.resize(n);
  for (int i = 0; i < n; ++i) {
    int cnt = 0;
    for (const int32_t u : map.neighbors(q_from[i])) cand_[i][cnt++] = u;
    cand_[i][cnt++] = q_from[i];
    count_[i] = static_cast<uint8_t>(cnt);
    value_[i].fill(0.0);
  }
}

int64_t agent_regret(const GridMap& map, DistanceCache& cache, const Config& q_from, int agent,
                     int32_t chosen, const std::vector<int32_t>& goals)
{
  const auto& table = cache.table(goals[agent]);
  int64_t best = table.dist[q_from[agent]];
  for (const int32_t u : map.neighbors(q_from[agent])) {
    best = std::min<int64_t>(best, table.dist[u]);
  }
  return static_cast<int64_t>(table.dist[chosen]) - best;
}

bool PibtEngine::regret_step(const Config& q_from, const std::vector<int32_t>& goals,
                             const PriorityState& prio, const StrategyConfig& strategy, Rng& rng,
                             Config& q_to, std::span<const AgentAssignment> constraints)
{
  prepare(q_from, goals);
  sort_order(prio);
  regret_table_.init(*map_, q_from);
  sort_table_ = &regret_table_;
  learn_ = true;
  w_ = strategy.w;
  for (int run = 0; run < strategy.m; ++run) {
    if (observer_ != nullptr) observer_->on_run_start(run);
    reset_assignments();
    if (!apply_constraints(constraints) || !complete_run(strategy, rng)) {
      sort_table_ = nullptr;
      learn_ = false;
      return false;
    }
  }
  sort_table_ = nullptr;
  learn_ = false;
  q_to = q_to_;
  return true;
}

}  // namespace mapf
