/*
 * One-shot solver: depth-first search over configurations with lazily
 * enumerated (agent, vertex) constraints and PIBT-based successor
 * generation.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "mapf/instance.hpp"
#include "mapf/strategy.hpp"

namespace mapf {

using Solution = std::vector<Config>;  // configs[0] = starts, back = goals

struct SolveResult {
  enum class Status { Solved, Timeout, UnreachableGoal, Exhausted };

  Status status = Status::Timeout;
  Solution solution;
  double runtime_ms = 0.0;
  int64_t loop_count = 0;     // high-level iterations
  int64_t node_count = 0;     // distinct configurations discovered
  int unreachable_agent = -1;  // set for UnreachableGoal

  bool solved() const { return status == Status::Solved; }
};

const char* status_name(SolveResult::Status s);

SolveResult solve_oneshot(const Instance& ins, const StrategyConfig& strategy,
                          std::chrono::milliseconds time_limit, uint64_t seed);

// solution file: one configuration per line as (x,y) tuples
std::string serialize_solution(const GridMap& map, const Solution& sol);
Solution parse_solution(const GridMap& map, std::string_view text);

}  // namespace mapf
