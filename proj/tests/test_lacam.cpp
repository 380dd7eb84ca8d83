#include <chrono>

#include "doctest.h"
#include "mapf/lacam.hpp"
#include "mapf/metrics.hpp"
#include "oracles.hpp"

using namespace mapf;
using namespace std::chrono_literals;

namespace {

const StrategyConfig kAllStrategies[] = {
    {Strategy::Original}, {Strategy::Vacancy},  {Strategy::MC},
    {Strategy::Hindrance}, {Strategy::Regret},  {Strategy::HR},
    {Strategy::RH},
};

Instance make_instance(const GridMap& g, std::vector<int32_t> starts, std::vector<int32_t> goals)
{
  Instance ins;
  ins.map = &g;
  ins.starts = std::move(starts);
  ins.goals = std::move(goals);
  return ins;
}

}  // namespace

TEST_CASE("solve: starts equal goals gives a zero-step solution")
{
  const GridMap g = generate_empty_map(3, 3);
  const Instance ins = make_instance(g, {g.id_at(0, 0)}, {g.id_at(0, 0)});
  const auto res = solve_oneshot(ins, {Strategy::Original}, 1000ms, 1);
  REQUIRE(res.solved());
  CHECK(res.solution.size() == 1);
  CHECK(sum_of_costs(ins, res.solution) == 0);
}

TEST_CASE("solve: single agent matches the distance lower bound")
{
  const GridMap g = generate_random_map(6, 6, 6, 31);
  const Instance ins = random_instance(g, 1, 4);
  const auto res = solve_oneshot(ins, {Strategy::Original}, 1000ms, 1);
  REQUIRE(res.solved());
  CHECK_FALSE(validate_solution(ins, res.solution).has_value());
  CHECK(sum_of_costs(ins, res.solution) == soc_lower_bound(ins));
}

TEST_CASE("solve: two agents swap through a side pocket")
{
  // 3-cell corridor with one spur off the middle
  const GridMap g = GridMap::parse("type octile\nheight 2\nwidth 3\nmap\n...\n@.@\n");
  const Instance ins =
      make_instance(g, {g.id_at(0, 0), g.id_at(2, 0)}, {g.id_at(2, 0), g.id_at(0, 0)});
  REQUIRE(oracle::joint_reachable(g, ins.starts[0], ins.starts[1], ins.goals[0], ins.goals[1]));
  for (const auto& strategy : kAllStrategies) {
    const auto res = solve_oneshot(ins, strategy, 10000ms, 7);
    REQUIRE_MESSAGE(res.solved(), strategy_name(strategy.kind));
    CHECK_FALSE(validate_solution(ins, res.solution).has_value());
  }
}

TEST_CASE("solve: pure corridor swap is reported exhausted, not timeout")
{
  const GridMap g = generate_empty_map(1, 3);
  const Instance ins =
      make_instance(g, {g.id_at(0, 0), g.id_at(2, 0)}, {g.id_at(2, 0), g.id_at(0, 0)});
  CHECK_FALSE(oracle::joint_reachable(g, ins.starts[0], ins.starts[1], ins.goals[0], ins.goals[1]));
  const auto res = solve_oneshot(ins, {Strategy::Original}, 10000ms, 1);
  CHECK(res.status == SolveResult::Status::Exhausted);
}

TEST_CASE("solve: disconnected start/goal is detected by the distance table")
{
  const GridMap g = GridMap::parse("type octile\nheight 1\nwidth 3\nmap\n.@.\n");
  const Instance ins = make_instance(g, {g.id_at(0, 0)}, {g.id_at(2, 0)});
  const auto res = solve_oneshot(ins, {Strategy::Original}, 1000ms, 1);
  CHECK(res.status == SolveResult::Status::UnreachableGoal);
  CHECK(res.unreachable_agent == 0);
}

TEST_CASE("solve agrees with joint-state reachability on micro maps")
{
  // a few adversarial shapes plus seeded random 3x4s, two agents each
  std::vector<GridMap> maps;
  maps.push_back(GridMap::parse("type octile\nheight 2\nwidth 3\nmap\n...\n@.@\n"));
  maps.push_back(generate_empty_map(2, 2));
  maps.push_back(GridMap::parse("type octile\nheight 3\nwidth 3\nmap\n...\n@.@\n...\n"));
  for (uint64_t seed = 0; seed < 4; ++seed) maps.push_back(generate_random_map(3, 4, 3, seed));

  int agree = 0;
  for (const auto& g : maps) {
    const int v = g.num_vertices();
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
      const auto s1 = static_cast<int32_t>(rng.below(v));
      auto s2 = static_cast<int32_t>(rng.below(v));
      if (s1 == s2) continue;
      const auto g1 = static_cast<int32_t>(rng.below(v));
      auto g2 = static_cast<int32_t>(rng.below(v));
      if (g1 == g2) continue;
      const Instance ins = make_instance(g, {s1, s2}, {g1, g2});
      const bool reachable = oracle::joint_reachable(g, s1, s2, g1, g2);
      for (const auto& strategy : kAllStrategies) {
        const auto res = solve_oneshot(ins, strategy, 10000ms, 3);
        REQUIRE(res.status != SolveResult::Status::Timeout);
        CHECK_MESSAGE(res.solved() == reachable, strategy_name(strategy.kind));
        if (res.solved()) {
          CHECK_FALSE(validate_solution(ins, res.solution).has_value());
        }
        ++agree;
      }
    }
  }
  CHECK(agree > 100);
}

TEST_CASE("solve: deterministic for fixed instance, strategy, seed")
{
  const GridMap g = generate_random_map(8, 8, 10, 12);
  const Instance ins = random_instance(g, 12, 6);
  for (const auto& strategy : {StrategyConfig{Strategy::HR}, StrategyConfig{Strategy::MC}}) {
    const auto a = solve_oneshot(ins, strategy, 5000ms, 42);
    const auto b = solve_oneshot(ins, strategy, 5000ms, 42);
    REQUIRE(a.solved());
    REQUIRE(b.solved());
    CHECK(a.solution == b.solution);
  }
}

TEST_CASE("solution files round-trip")
{
  const GridMap g = generate_random_map(6, 6, 4, 8);
  const Instance ins = random_instance(g, 5, 2);
  const auto res = solve_oneshot(ins, {Strategy::Hindrance}, 5000ms, 9);
  REQUIRE(res.solved());
  const std::string text = serialize_solution(g, res.solution);
  CHECK(parse_solution(g, text) == res.solution);
}

TEST_CASE("solve: fuzzed medium instances all validate")
{
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const GridMap g = generate_random_map(8, 8, 10, seed);
    const int n = g.num_vertices() / 3;
    const Instance ins = random_instance(g, n, seed + 50);
    const auto& strategy = kAllStrategies[seed % 7];
    const auto res = solve_oneshot(ins, strategy, 10000ms, seed);
    REQUIRE_MESSAGE(res.solved(), strategy_name(strategy.kind));
    const auto violation = validate_solution(ins, res.solution);
    CHECK_FALSE(violation.has_value());
    CHECK(normalized_soc(ins, res.solution) >= 1.0);
  }
}
