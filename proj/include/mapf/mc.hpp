/*
 * Monte-Carlo configuration generation: sample k plain-PIBT configurations
 * with derived seeds and keep the one minimizing g + h.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mapf/pibt.hpp"

namespace mapf {

// |{ i : not (q[i] = q_next[i] = g_i) }|
int64_t transition_cost_g(const Config& q, const Config& q_next, const std::vector<int32_t>& goals);

// sum over agents of dist(q[i], g_i); throws UnreachableGoal semantics via sentinel
int64_t heuristic_h(const Config& q, const std::vector<int32_t>& goals, DistanceCache& cache);

// Sample j uses seed mix(step_seed, j) where step_seed is drawn from rng.
// Ties in g + h resolve to the earliest sample. Returns false only when
// every sample fails under the constraint set.
bool mc_step(PibtEngine& engine, const Config& q_from, const std::vector<int32_t>& goals,
             const PriorityState& prio, int k, Rng& rng, Config& q_to,
             std::span<const AgentAssignment> constraints = {});

}  // namespace mapf
