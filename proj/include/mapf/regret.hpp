/*
 * Regret bookkeeping for the learning configuration generator.
 *
 * The table holds one value per (agent, candidate action); it is zeroed at
 * the start of every learning step and updated during backtracking with
 * R <- (1-w)*R + w*regret. Entries live only for the duration of one
 * configuration generation.
 */
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mapf/dist_table.hpp"
#include "mapf/grid.hpp"

namespace mapf {

using Config = std::vector<int32_t>;  // one vertex per agent

class RegretTable {
 public:
  // zero for every agent and every candidate (neighbors + stay)
  void init(const GridMap& map, const Config& q_from);

  double get(int agent, int32_t v) const
  {
    const auto& c = cand_[agent];
    for (int k = 0; k < count_[agent]; ++k) {
      if (c[k] == v) return value_[agent][k];
    }
    return 0.0;
  }

  void update(int agent, int32_t v, double w, double regret)
  {
    auto& c = cand_[agent];
    for (int k = 0; k < count_[agent]; ++k) {
      if (c[k] == v) {
        value_[agent][k] = (1.0 - w) * value_[agent][k] + w * regret;
        return;
      }
    }
  }

  int n() const { return static_cast<int>(cand_.size()); }

 private:
  std::vector<std::array<int32_t, 5>> cand_;
  std::vector<std::array<double, 5>> value_;
  std::vector<uint8_t> count_;
};

// dist(chosen, g_i) minus the best candidate distance; the forced-stay
// fallback passes chosen = q_from[agent]
int64_t agent_regret(const GridMap& map, DistanceCache& cache, const Config& q_from, int agent,
                     int32_t chosen, const std::vector<int32_t>& goals);

}  // namespace mapf
