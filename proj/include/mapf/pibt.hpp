/*
 * PIBT configuration generation with pluggable tiebreaking.
 *
 * One engine instance owns the per-step scratch state (occupancy maps,
 * assignment buffers) for a single map and is reused across steps. A step
 * is single-threaded; distinct engines may run concurrently.
 *
 * step()        one generation pass with dynamic priorities
 * regret_step() m learning passes sharing a regret table, final pass is
 *               the output; backtracking carries accumulated regret
 *
 * Both honor an optional set of (agent, vertex) constraints that are
 * assigned first; an infeasible constraint set fails the generation.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mapf/dist_table.hpp"
#include "mapf/grid.hpp"
#include "mapf/regret.hpp"
#include "mapf/rng.hpp"
#include "mapf/strategy.hpp"

namespace mapf {

struct AgentAssignment {
  int32_t agent;
  int32_t vertex;
};

struct PriorityState {
  std::vector<double> base;     // distinct fractions in [0, 1)
  std::vector<int32_t> elapsed;  // timesteps since last goal arrival

  static PriorityState init(int n)
  {
    PriorityState p;
    p.base.resize(n);
    p.elapsed.assign(n, 0);
    for (int i = 0; i < n; ++i) p.base[i] = static_cast<double>(i) / n;
    return p;
  }
  double effective(int i) const { return elapsed[i] + base[i]; }
  int n() const { return static_cast<int>(base.size()); }
};

// agents resting on their goals reset to zero, everyone else ages by one
void update_priorities(PriorityState& p, const Config& q, const std::vector<int32_t>& goals);

// vertex / edge-swap check against a partial assignment (-1 = unassigned)
bool collision_ok(const Config& q_from, const Config& q_to_partial, int agent, int32_t v);

// test/diagnostics hook into the generation internals
struct StepObserver {
  virtual ~StepObserver() = default;
  virtual void on_run_start(int /*run*/) {}
  // agent settled on vertex; total_regret = own regret + inherited chain regret
  virtual void on_return(int /*agent*/, int32_t /*vertex*/, bool /*valid*/,
                         double /*own_regret*/, double /*total_regret*/) {}
  // backtrack from child to parent through the contested vertex
  virtual void on_backtrack(int /*parent*/, int /*child*/, int32_t /*vertex*/,
                            double /*child_regret*/, bool /*child_valid*/,
                            double /*table_before*/, double /*table_after*/) {}
};

class PibtEngine {
 public:
  PibtEngine(const GridMap& map, DistanceCache& cache);

  // Returns false only when the constraint set cannot be completed into a
  // collision-free configuration; without constraints it always succeeds.
  bool step(const Config& q_from, const std::vector<int32_t>& goals, const PriorityState& prio,
            const StrategyConfig& strategy, Rng& rng, Config& q_to,
            std::span<const AgentAssignment> constraints = {});

  // Algorithm: zero the regret table, run the modified PIBT strategy.m
  // times (table kept across runs, assignments reset), return the final
  // run's configuration.
  bool regret_step(const Config& q_from, const std::vector<int32_t>& goals,
                   const PriorityState& prio, const StrategyConfig& strategy, Rng& rng,
                   Config& q_to, std::span<const AgentAssignment> constraints = {});

  // candidate actions of one agent, sorted by the strategy's key tuple;
  // missing regret table reads as zero
  std::vector<int32_t> preference(const Config& q, int agent, const std::vector<int32_t>& goals,
                                  const StrategyConfig& strategy, Rng& rng,
                                  const RegretTable* table = nullptr);

  // count of adjacent agents whose next-step progress `action` would block
  int hindrance_of(const Config& q, int agent, int32_t action,
                   const std::vector<int32_t>& goals);

  const RegretTable& last_regret_table() const { return regret_table_; }
  void set_observer(StepObserver* obs) { observer_ = obs; }

  const GridMap& map() const { return *map_; }
  DistanceCache& cache() { return *cache_; }

 private:
  struct Key {
    int32_t dist;
    double k1;
    double k2;
    double eps;
  };
  struct AgentReturn {
    bool valid;
    double regret;
  };

  void prepare(const Config& q_from, const std::vector<int32_t>& goals);
  void reset_assignments();
  bool apply_constraints(std::span<const AgentAssignment> constraints);
  bool complete_run(const StrategyConfig& strategy, Rng& rng);
  AgentReturn run_agent(int i, const StrategyConfig& strategy, Rng& rng);
  int sort_candidates(int i, const StrategyConfig& strategy, const RegretTable* table, Rng& rng,
                      int32_t (&cand)[5]);
  int hindrance_fast(int i, int32_t cur, int32_t u) const;
  void sort_order(const PriorityState& prio);

  const GridMap* map_;
  DistanceCache* cache_;
  int n_ = 0;
  const Config* q_from_ = nullptr;
  const std::vector<int32_t>* goals_ = nullptr;
  std::vector<int32_t> occupied_now_;   // vertex -> agent, -1 free
  std::vector<int32_t> occupied_next_;  // vertex -> agent, -1 unclaimed
  std::vector<int32_t> touched_now_;
  std::vector<int32_t> touched_next_;
  std::vector<const int32_t*> dist_row_;  // per agent, distances to its goal
  std::vector<int32_t> order_;            // agents by descending priority
  Config q_to_;                           // -1 = unassigned
  RegretTable regret_table_;
  const RegretTable* sort_table_ = nullptr;
  bool learn_ = false;
  double w_ = 0.0;
  StepObserver* observer_ = nullptr;
};

}  // namespace mapf
