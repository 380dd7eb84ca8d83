#include "mapf/metrics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace mapf {

const char* violation_name(Violation::Kind k)
{
  switch (k) {
    case Violation::Kind::Empty: return "empty";
    case Violation::Kind::BadStart: return "bad_start";
    case Violation::Kind::BadGoal: return "bad_goal";
    case Violation::Kind::NotTransitionable: return "not_transitionable";
    case Violation::Kind::VertexConflict: return "vertex_conflict";
    case Violation::Kind::EdgeConflict: return "edge_conflict";
  }
  return "?";
}

std::string Violation::to_json() const
{
  std::ostringstream out;
  out << "{\"kind\":\"" << violation_name(kind) << "\",\"timestep\":" << timestep
      << ",\"agent_a\":" << agent_a << ",\"agent_b\":" << agent_b << "}";
  return out.str();
}

std::optional<Violation> validate_solution(const Instance& ins, const Solution& sol)
{
  const int n = ins.n();
  if (sol.empty()) return Violation{Violation::Kind::Empty};
  for (int i = 0; i < n; ++i) {
    if (sol.front()[i] != ins.starts[i]) return Violation{Violation::Kind::BadStart, 0, i};
  }
  for (int i = 0; i < n; ++i) {
    if (sol.back()[i] != ins.goals[i]) {
      return Violation{Violation::Kind::BadGoal, static_cast<int>(sol.size()) - 1, i};
    }
  }
  std::unordered_map<int32_t, int> occupant;       // current config
  std::unordered_map<int32_t, int> occupant_prev;  // previous config
  for (size_t t = 0; t < sol.size(); ++t) {
    const Config& q = sol[t];
    if (static_cast<int>(q.size()) != n) {
      return Violation{Violation::Kind::Empty, static_cast<int>(t)};
    }
    occupant.clear();
    for (int i = 0; i < n; ++i) {
      const auto [it, fresh] = occupant.emplace(q[i], i);
      if (!fresh) {
        return Violation{Violation::Kind::VertexConflict, static_cast<int>(t), it->second, i};
      }
    }
    if (t > 0) {
      const Config& prev = sol[t - 1];
      occupant_prev.clear();
      for (int i = 0; i < n; ++i) occupant_prev.emplace(prev[i], i);
      for (int i = 0; i < n; ++i) {
        if (q[i] == prev[i]) continue;
        bool adjacent = false;
        for (const int32_t u : ins.map->neighbors(prev[i])) {
          if (u == q[i]) {
            adjacent = true;
            break;
          }
        }
        if (!adjacent) {
          return Violation{Violation::Kind::NotTransitionable, static_cast<int>(t), i};
        }
        const auto it = occupant_prev.find(q[i]);
        if (it != occupant_prev.end() && it->second != i && q[it->second] == prev[i]) {
          return Violation{Violation::Kind::EdgeConflict, static_cast<int>(t),
                           std::min(i, it->second), std::max(i, it->second)};
        }
      }
    }
  }
  return std::nullopt;
}

int64_t sum_of_costs(const Instance& ins, const Solution& sol)
{
  if (const auto v = validate_solution(ins, sol)) {
    throw std::runtime_error("sum_of_costs on invalid solution: " + v->to_json());
  }
  const int n = ins.n();
  int64_t soc = 0;
  for (int i = 0; i < n; ++i) {
    int64_t last_off = -1;  // last timestep the agent is not at its goal
    for (int t = static_cast<int>(sol.size()) - 1; t >= 0; --t) {
      if (sol[t][i] != ins.goals[i]) {
        last_off = t;
        break;
      }
    }
    soc += last_off + 1;
  }
  return soc;
}

double normalized_soc(int64_t soc, int64_t lower_bound)
{
  if (lower_bound == 0) {
    return soc == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(soc) / static_cast<double>(lower_bound);
}

double normalized_soc(const Instance& ins, const Solution& sol)
{
  return normalized_soc(sum_of_costs(ins, sol), soc_lower_bound(ins));
}

double throughput(const SimResult& result)
{
  return result.throughput();
}

}  // namespace mapf
