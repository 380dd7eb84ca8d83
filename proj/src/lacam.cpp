#include "mapf/lacam.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "mapf/config_gen.hpp"
#include "mapf/pibt.hpp"

namespace mapf {

namespace {

struct ConfigHash {
  size_t operator()(const Config& q) const
  {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ q.size();
    for (const int32_t v : q) {
      h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

struct ConstraintNode {
  ConstraintNode* parent;
  int32_t agent;
  int32_t vertex;
  int depth;
};

struct Node {
  Config config;
  Node* parent;
  PriorityState prio;
  std::vector<int32_t> order;  // descending effective priority
  std::deque<ConstraintNode*> queue;
  std::vector<std::unique_ptr<ConstraintNode>> pool;

  Node(Config c, Node* par, PriorityState p) : config(std::move(c)), parent(par), prio(std::move(p))
  {
    const int n = static_cast<int>(config.size());
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return prio.effective(a) > prio.effective(b); });
    pool.push_back(std::make_unique<ConstraintNode>(ConstraintNode{nullptr, -1, -1, 0}));
    queue.push_back(pool.back().get());
  }
};

std::vector<AgentAssignment> bindings_of(const ConstraintNode* m)
{
  std::vector<AgentAssignment> out(m->depth);
  for (int d = m->depth - 1; d >= 0; --d) {
    out[d] = {m->agent, m->vertex};
    m = m->parent;
  }
  return out;
}

}  // namespace

const char* status_name(SolveResult::Status s)
{
  switch (s) {
    case SolveResult::Status::Solved: return "solved";
    case SolveResult::Status::Timeout: return "timeout";
    case SolveResult::Status::UnreachableGoal: return "unreachable";
    case SolveResult::Status::Exhausted: return "exhausted";
  }
  return "?";
}

SolveResult solve_oneshot(const Instance& ins, const StrategyConfig& strategy,
                          std::chrono::milliseconds time_limit, uint64_t seed)
{
  const auto t_start = std::chrono::steady_clock::now();
  const auto deadline = t_start + time_limit;
  const auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
        .count();
  };

  check_instance(ins);
  SolveResult result;

  DistanceCache cache(*ins.map);
  for (int i = 0; i < ins.n(); ++i) {
    if (cache.dist(ins.starts[i], ins.goals[i]) == kUnreachable) {
      result.status = SolveResult::Status::UnreachableGoal;
      result.unreachable_agent = i;
      result.runtime_ms = elapsed_ms();
      return result;
    }
  }

  PibtEngine engine(*ins.map, cache);
  Rng rng(seed);
  const int n = ins.n();

  std::vector<Node*> open;  // depth-first stack, duplicates allowed
  std::unordered_map<Config, std::unique_ptr<Node>, ConfigHash> explored;

  auto root = std::make_unique<Node>(ins.starts, nullptr, PriorityState::init(n));
  open.push_back(root.get());
  explored[ins.starts] = std::move(root);
  result.node_count = 1;

  Config q_next;
  while (!open.empty()) {
    ++result.loop_count;
    if (std::chrono::steady_clock::now() >= deadline) {
      result.status = SolveResult::Status::Timeout;
      result.runtime_ms = elapsed_ms();
      return result;
    }

    Node* node = open.back();
    if (node->config == ins.goals) {
      Solution sol;
      for (const Node* s = node; s != nullptr; s = s->parent) sol.push_back(s->config);
      std::reverse(sol.begin(), sol.end());
      result.status = SolveResult::Status::Solved;
      result.solution = std::move(sol);
      result.runtime_ms = elapsed_ms();
      return result;
    }
    if (node->queue.empty()) {
      open.pop_back();
      continue;
    }

    ConstraintNode* m = node->queue.front();
    node->queue.pop_front();
    if (m->depth < n) {
      // lazily expand the constraint tree: next agent in priority order,
      // candidate vertices in that agent's preference order
      const int agent = node->order[m->depth];
      const auto prefs =
          engine.preference(node->config, agent, ins.goals, strategy, rng, nullptr);
      for (const int32_t v : prefs) {
        node->pool.push_back(
            std::make_unique<ConstraintNode>(ConstraintNode{m, agent, v, m->depth + 1}));
        node->queue.push_back(node->pool.back().get());
      }
    }

    const auto constraints = bindings_of(m);
    if (!generate_config(engine, strategy, node->config, ins.goals, node->prio, rng, q_next,
                         constraints)) {
      continue;
    }

    if (const auto it = explored.find(q_next); it != explored.end()) {
      open.push_back(it->second.get());  // revisit known configuration
      continue;
    }

    PriorityState prio = node->prio;
    update_priorities(prio, q_next, ins.goals);
    auto child = std::make_unique<Node>(q_next, node, std::move(prio));
    open.push_back(child.get());
    explored[q_next] = std::move(child);
    ++result.node_count;
  }

  result.status = SolveResult::Status::Exhausted;  // search space fully enumerated
  result.runtime_ms = elapsed_ms();
  return result;
}

std::string serialize_solution(const GridMap& map, const Solution& sol)
{
  std::ostringstream out;
  for (const auto& q : sol) {
    for (size_t i = 0; i < q.size(); ++i) {
      const Cell c = map.coord_of(q[i]);
      if (i > 0) out << ' ';
      out << '(' << c.x << ',' << c.y << ')';
    }
    out << '\n';
  }
  return out.str();
}

Solution parse_solution(const GridMap& map, std::string_view text)
{
  Solution sol;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Config q;
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      int x = 0, y = 0;
      if (std::sscanf(tok.c_str(), "(%d,%d)", &x, &y) != 2) {
        throw std::runtime_error("bad solution token: " + tok);
      }
      const int32_t v = map.id_at(x, y);
      if (v < 0) throw std::runtime_error("solution vertex off the map: " + tok);
      q.push_back(v);
    }
    sol.push_back(std::move(q));
  }
  return sol;
}

}  // namespace mapf
