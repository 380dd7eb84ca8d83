#include "doctest.h"
#include "mapf/metrics.hpp"

using namespace mapf;

namespace {

struct Fixture {
  GridMap map = generate_empty_map(1, 5);
  Instance ins;

  Fixture()
  {
    ins.map = &map;
    ins.starts = {map.id_at(0, 0)};
    ins.goals = {map.id_at(4, 0)};
  }
  int32_t at(int x) const { return map.id_at(x, 0); }
};

}  // namespace

TEST_CASE("validate: straight shortest path is accepted")
{
  Fixture f;
  const Solution sol = {{f.at(0)}, {f.at(1)}, {f.at(2)}, {f.at(3)}, {f.at(4)}};
  CHECK_FALSE(validate_solution(f.ins, sol).has_value());
  CHECK(sum_of_costs(f.ins, sol) == 4);
  CHECK(normalized_soc(f.ins, sol) == doctest::Approx(1.0));
}

TEST_CASE("validate: wrong start, wrong goal, teleport")
{
  Fixture f;
  const Solution bad_start = {{f.at(1)}, {f.at(4)}};
  CHECK(validate_solution(f.ins, bad_start)->kind == Violation::Kind::BadStart);

  const Solution bad_goal = {{f.at(0)}, {f.at(1)}};
  CHECK(validate_solution(f.ins, bad_goal)->kind == Violation::Kind::BadGoal);

  const Solution teleport = {{f.at(0)}, {f.at(2)}, {f.at(3)}, {f.at(4)}};
  const auto v = validate_solution(f.ins, teleport);
  REQUIRE(v.has_value());
  CHECK(v->kind == Violation::Kind::NotTransitionable);
  CHECK(v->timestep == 1);
  CHECK(v->agent_a == 0);
}

TEST_CASE("validate: injected swap and vertex conflict with timestep and agents")
{
  GridMap map = generate_empty_map(2, 3);
  Instance ins;
  ins.map = &map;
  ins.starts = {map.id_at(0, 0), map.id_at(1, 0)};
  ins.goals = {map.id_at(1, 0), map.id_at(0, 0)};
  const Solution swap = {{map.id_at(0, 0), map.id_at(1, 0)}, {map.id_at(1, 0), map.id_at(0, 0)}};
  const auto v = validate_solution(ins, swap);
  REQUIRE(v.has_value());
  CHECK(v->kind == Violation::Kind::EdgeConflict);
  CHECK(v->timestep == 1);
  CHECK(v->agent_a == 0);
  CHECK(v->agent_b == 1);
  CHECK(v->to_json().find("edge_conflict") != std::string::npos);

  Instance ins2;
  ins2.map = &map;
  ins2.starts = {map.id_at(0, 0), map.id_at(2, 0)};
  ins2.goals = {map.id_at(1, 0), map.id_at(1, 1)};
  const Solution clash = {{map.id_at(0, 0), map.id_at(2, 0)},
                          {map.id_at(1, 0), map.id_at(1, 0)}};
  const auto v2 = validate_solution(ins2, clash);
  REQUIRE(v2.has_value());
  CHECK(v2->kind == Violation::Kind::VertexConflict);
}

TEST_CASE("sum_of_costs: rest-at-start contributes zero")
{
  Fixture f;
  f.ins.goals = {f.at(0)};
  const Solution sol = {{f.at(0)}, {f.at(0)}, {f.at(0)}};
  CHECK(sum_of_costs(f.ins, sol) == 0);
}

TEST_CASE("sum_of_costs: goal-leaving path counts until final rest")
{
  // reach goal at t=3, wander off at t=5-6, return at t=7, rest after
  GridMap map = generate_empty_map(1, 6);
  Instance ins;
  ins.map = &map;
  ins.starts = {map.id_at(0, 0)};
  ins.goals = {map.id_at(3, 0)};
  const auto at = [&](int x) { return map.id_at(x, 0); };
  const Solution sol = {{at(0)}, {at(1)}, {at(2)}, {at(3)}, {at(3)},
                        {at(4)}, {at(5)}, {at(4)}, {at(3)}, {at(3)}};
  // off-goal at t=7 is the last, so cost is 8
  CHECK(sum_of_costs(ins, sol) == 8);
}

TEST_CASE("sum_of_costs: invariant under appended stay configurations")
{
  Fixture f;
  Solution sol = {{f.at(0)}, {f.at(1)}, {f.at(2)}, {f.at(3)}, {f.at(4)}};
  const int64_t base = sum_of_costs(f.ins, sol);
  for (int extra = 0; extra < 3; ++extra) {
    sol.push_back(sol.back());
    CHECK(sum_of_costs(f.ins, sol) == base);
  }
}

TEST_CASE("normalized_soc: ratios and degenerate lower bounds")
{
  CHECK(normalized_soc(8, 4) == doctest::Approx(2.0));
  CHECK(normalized_soc(0, 0) == doctest::Approx(1.0));
  CHECK(std::isinf(normalized_soc(3, 0)));
}

TEST_CASE("throughput: counts over horizon")
{
  SimResult r;
  r.horizon = 1000;
  r.tasks_completed = 0;
  CHECK(throughput(r) == doctest::Approx(0.0));
  r.tasks_completed = 50;
  CHECK(throughput(r) == doctest::Approx(0.05));
}
