#include "mapf/pibt.hpp"

#include <algorithm>
#include <cassert>

namespace mapf {

void update_priorities(PriorityState& p, const Config& q, const std::vector<int32_t>& goals)
{
  for (int i = 0; i < p.n(); ++i) {
    p.elapsed[i] = (q[i] == goals[i]) ? 0 : p.elapsed[i] + 1;
  }
}

bool collision_ok(const Config& q_from, const Config& q_to_partial, int agent, int32_t v)
{
  const int n = static_cast<int>(q_from.size());
  for (int j = 0; j < n; ++j) {
    if (j == agent) continue;
    const int32_t t = q_to_partial[j];
    if (t < 0) continue;
    if (t == v) return false;                               // vertex conflict
    if (q_from[j] == v && t == q_from[agent]) return false;  // edge swap
  }
  return true;
}

PibtEngine::PibtEngine(const GridMap& map, DistanceCache& cache) : map_(&map), cache_(&cache)
{
  occupied_now_.assign(map.num_vertices(), -1);
  occupied_next_.assign(map.num_vertices(), -1);
}

void PibtEngine::prepare(const Config& q_from, const std::vector<int32_t>& goals)
{
  n_ = static_cast<int>(q_from.size());
  q_from_ = &q_from;
  goals_ = &goals;
  for (const int32_t v : touched_now_) occupied_now_[v] = -1;
  touched_now_.clear();
  for (int i = 0; i < n_; ++i) {
    assert(occupied_now_[q_from[i]] == -1 && "q_from must be collision-free");
    occupied_now_[q_from[i]] = i;
    touched_now_.push_back(q_from[i]);
  }
  dist_row_.resize(n_);
  for (int i = 0; i < n_; ++i) dist_row_[i] = cache_->table(goals[i]).dist.data();
}

void PibtEngine::reset_assignments()
{
  for (const int32_t v : touched_next_) occupied_next_[v] = -1;
  touched_next_.clear();
  q_to_.assign(n_, -1);
}

void PibtEngine::sort_order(const PriorityState& prio)
{
  order_.resize(n_);
  for (int i = 0; i < n_; ++i) order_[i] = i;
  std::sort(order_.begin(), order_.end(),
            [&](int a, int b) { return prio.effective(a) > prio.effective(b); });
}

int PibtEngine::hindrance_fast(int i, int32_t cur, int32_t u) const
{
  int h = 0;
  for (const int32_t w : map_->neighbors(cur)) {
    const int j = occupied_now_[w];
    if (j < 0 || w == u) continue;  // u != Q[j]
    const int32_t* dj = dist_row_[j];
    if (dj[u] < dj[cur]) ++h;  // action heads into j's progress
  }
  return h;
}

int PibtEngine::sort_candidates(int i, const StrategyConfig& strategy, const RegretTable* table,
                                Rng& rng, int32_t (&cand)[5])
{
  const int32_t cur = (*q_from_)[i];
  const auto nbrs = map_->neighbors(cur);
  int cnt = 0;
  for (const int32_t u : nbrs) cand[cnt++] = u;
  cand[cnt++] = cur;

  const int32_t* drow = dist_row_[i];
  Key key[5];
  for (int c = 0; c < cnt; ++c) {
    const int32_t v = cand[c];
    Key k{drow[v], 0.0, 0.0, 0.0};
    switch (strategy.kind) {
      case Strategy::Original:
      case Strategy::MC:
        break;
      case Strategy::Vacancy:
        k.k1 = occupied_now_[v] >= 0 ? 1.0 : 0.0;
        break;
      case Strategy::Hindrance:
        k.k1 = hindrance_fast(i, cur, v);
        break;
      case Strategy::Regret:
        k.k1 = table ? table->get(i, v) : 0.0;
        break;
      case Strategy::HR:
        k.k1 = hindrance_fast(i, cur, v);
        k.k2 = table ? table->get(i, v) : 0.0;
        break;
      case Strategy::RH:
        k.k1 = table ? table->get(i, v) : 0.0;
        k.k2 = hindrance_fast(i, cur, v);
        break;
    }
    k.eps = rng.uniform01();
    key[c] = k;
  }

  const auto less = [](const Key& a, const Key& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.k1 != b.k1) return a.k1 < b.k1;
    if (a.k2 != b.k2) return a.k2 < b.k2;
    return a.eps < b.eps;
  };
  // stable insertion sort: full-key ties keep enumeration order
  for (int c = 1; c < cnt; ++c) {
    const Key k = key[c];
    const int32_t v = cand[c];
    int p = c - 1;
    while (p >= 0 && less(k, key[p])) {
      key[p + 1] = key[p];
      cand[p + 1] = cand[p];
      --p;
    }
    key[p + 1] = k;
    cand[p + 1] = v;
  }
  return cnt;
}

PibtEngine::AgentReturn PibtEngine::run_agent(int i, const StrategyConfig& strategy, Rng& rng)
{
  const int32_t cur = (*q_from_)[i];
  int32_t cand[5];
  const int cnt = sort_candidates(i, strategy, sort_table_, rng, cand);

  const int32_t* drow = dist_row_[i];
  int32_t best_dist = drow[cand[0]];
  for (int c = 1; c < cnt; ++c) best_dist = std::min(best_dist, drow[cand[c]]);
  const auto own_regret = [&](int32_t v) {
    return static_cast<double>(static_cast<int64_t>(drow[v]) - best_dist);
  };

  for (int c = 0; c < cnt; ++c) {
    const int32_t v = cand[c];
    if (occupied_next_[v] >= 0) continue;  // vertex conflict
    const int j = occupied_now_[v];
    if (j >= 0 && j != i && q_to_[j] == (*q_from_)[i]) continue;  // edge swap

    q_to_[i] = v;
    occupied_next_[v] = i;
    touched_next_.push_back(v);

    double inherited = 0.0;
    if (j >= 0 && j != i && q_to_[j] < 0) {
      // priority inheritance: j must vacate v; backtracking reports
      // whether it could, plus the regret its chain accumulated
      const AgentReturn r = run_agent(j, strategy, rng);
      inherited = r.regret;
      if (learn_) {
        const double before = regret_table_.get(i, v);
        regret_table_.update(i, v, w_, r.regret);
        if (observer_ != nullptr) {
          observer_->on_backtrack(i, j, v, r.regret, r.valid, before, regret_table_.get(i, v));
        }
      } else if (observer_ != nullptr) {
        observer_->on_backtrack(i, j, v, r.regret, r.valid, 0.0, 0.0);
      }
      if (!r.valid) continue;  // j stayed put and now holds v
    }
    const double total = inherited + own_regret(v);
    if (observer_ != nullptr) observer_->on_return(i, v, true, own_regret(v), total);
    return {true, total};
  }

  // everything blocked: stay, report failure upward
  q_to_[i] = cur;
  occupied_next_[cur] = i;
  touched_next_.push_back(cur);
  if (observer_ != nullptr) observer_->on_return(i, cur, false, own_regret(cur), own_regret(cur));
  return {false, own_regret(cur)};
}

bool PibtEngine::apply_constraints(std::span<const AgentAssignment> constraints)
{
  for (const auto& [agent, vertex] : constraints) {
    assert(agent >= 0 && agent < n_ && q_to_[agent] < 0);
    if (occupied_next_[vertex] >= 0) return false;  // vertex conflict
    const int j = occupied_now_[vertex];
    if (j >= 0 && j != agent && q_to_[j] == (*q_from_)[agent]) return false;  // swap
    q_to_[agent] = vertex;
    occupied_next_[vertex] = agent;
    touched_next_.push_back(vertex);
  }
  return true;
}

bool PibtEngine::complete_run(const StrategyConfig& strategy, Rng& rng)
{
  for (const int i : order_) {
    if (q_to_[i] < 0 && !run_agent(i, strategy, rng).valid) return false;
  }
  return true;
}

bool PibtEngine::step(const Config& q_from, const std::vector<int32_t>& goals,
                      const PriorityState& prio, const StrategyConfig& strategy, Rng& rng,
                      Config& q_to, std::span<const AgentAssignment> constraints)
{
  prepare(q_from, goals);
  sort_order(prio);
  sort_table_ = nullptr;
  learn_ = false;
  reset_assignments();
  if (!apply_constraints(constraints)) return false;
  if (!complete_run(strategy, rng)) return false;
  q_to = q_to_;
  return true;
}

std::vector<int32_t> PibtEngine::preference(const Config& q, int agent,
                                            const std::vector<int32_t>& goals,
                                            const StrategyConfig& strategy, Rng& rng,
                                            const RegretTable* table)
{
  prepare(q, goals);
  int32_t cand[5];
  const int cnt = sort_candidates(agent, strategy, table, rng, cand);
  return {cand, cand + cnt};
}

int PibtEngine::hindrance_of(const Config& q, int agent, int32_t action,
                             const std::vector<int32_t>& goals)
{
  prepare(q, goals);
  return hindrance_fast(agent, q[agent], action);
}

}  // namespace mapf
