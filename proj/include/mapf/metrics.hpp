/*
 * Solution validation and evaluation metrics.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mapf/instance.hpp"
#include "mapf/lacam.hpp"
#include "mapf/lifelong.hpp"

namespace mapf {

struct Violation {
  enum class Kind {
    Empty,
    BadStart,
    BadGoal,
    NotTransitionable,
    VertexConflict,
    EdgeConflict,
  };
  Kind kind;
  int timestep = -1;
  int agent_a = -1;
  int agent_b = -1;

  std::string to_json() const;
};

const char* violation_name(Violation::Kind k);

// first violation found, or nullopt for a valid solution
std::optional<Violation> validate_solution(const Instance& ins, const Solution& sol);

// per agent, the first timestep from which it rests at its goal for the
// remainder of the solution; summed over agents
int64_t sum_of_costs(const Instance& ins, const Solution& sol);

// sum_of_costs / soc_lower_bound; 1.0 when both are zero
double normalized_soc(const Instance& ins, const Solution& sol);
double normalized_soc(int64_t soc, int64_t lower_bound);

double throughput(const SimResult& result);

}  // namespace mapf
