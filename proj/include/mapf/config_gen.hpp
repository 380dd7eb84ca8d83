/*
 * Strategy dispatch: one entry point that routes a configuration request
 * to the plain, regret-learning, or monte-carlo generator.
 */
#pragma once

#include "mapf/mc.hpp"
#include "mapf/pibt.hpp"

namespace mapf {

inline bool generate_config(PibtEngine& engine, const StrategyConfig& strategy,
                            const Config& q_from, const std::vector<int32_t>& goals,
                            const PriorityState& prio, Rng& rng, Config& q_to,
                            std::span<const AgentAssignment> constraints = {})
{
  if (strategy.kind == Strategy::MC) {
    return mc_step(engine, q_from, goals, prio, strategy.k, rng, q_to, constraints);
  }
  if (strategy.uses_regret()) {
    return engine.regret_step(q_from, goals, prio, strategy, rng, q_to, constraints);
  }
  return engine.step(q_from, goals, prio, strategy, rng, q_to, constraints);
}

}  // namespace mapf
