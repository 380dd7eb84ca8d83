/*
 * Independent reference implementations used only by tests. These stay
 * deliberately naive (enumeration, Floyd-Warshall, joint-state BFS) and
 * must not share code with the library paths they check.
 */
#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "mapf/grid.hpp"

namespace oracle {

// all-pairs shortest paths by Floyd-Warshall over the passable cells
inline std::vector<std::vector<int64_t>> all_pairs(const mapf::GridMap& map)
{
  const int n = map.num_vertices();
  const int64_t inf = 1'000'000'000;
  std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (const int32_t u : map.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// 2-agent joint-state reachability under vertex and swap conflicts
inline bool joint_reachable(const mapf::GridMap& map, int32_t s1, int32_t s2, int32_t g1,
                            int32_t g2)
{
  if (s1 == s2 || g1 == g2) return false;
  using State = std::pair<int32_t, int32_t>;
  std::set<State> seen;
  std::queue<State> open;
  open.push({s1, s2});
  seen.insert({s1, s2});
  const auto moves = [&](int32_t v) {
    std::vector<int32_t> out{v};
    for (const int32_t u : map.neighbors(v)) out.push_back(u);
    return out;
  };
  while (!open.empty()) {
    const auto [a, b] = open.front();
    open.pop();
    if (a == g1 && b == g2) return true;
    for (const int32_t na : moves(a)) {
      for (const int32_t nb : moves(b)) {
        if (na == nb) continue;                // vertex conflict
        if (na == b && nb == a) continue;      // swap
        if (seen.insert({na, nb}).second) open.push({na, nb});
      }
    }
  }
  return false;
}

// Two distance-relation checks per adjacent occupant, re-evaluated from
// scratch with its own BFS distances.
inline int hindrance_recount(const mapf::GridMap& map, const std::vector<int32_t>& q, int agent,
                             int32_t action, const std::vector<int32_t>& goals)
{
  const auto bfs = [&](int32_t goal) {
    std::vector<int64_t> dist(map.num_vertices(), -1);
    std::queue<int32_t> open;
    dist[goal] = 0;
    open.push(goal);
    while (!open.empty()) {
      const int32_t v = open.front();
      open.pop();
      for (const int32_t u : map.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          open.push(u);
        }
      }
    }
    return dist;
  };
  const auto unreachable_as_big = [](int64_t d) { return d < 0 ? int64_t{1} << 40 : d; };

  int count = 0;
  for (size_t j = 0; j < q.size(); ++j) {
    if (static_cast<int>(j) == agent) continue;
    bool adjacent = false;
    for (const int32_t w : map.neighbors(q[agent])) {
      if (q[j] == w) adjacent = true;
    }
    if (!adjacent) continue;
    if (action == q[j]) continue;
    const auto dist = bfs(goals[j]);
    if (unreachable_as_big(dist[action]) < unreachable_as_big(dist[q[agent]])) ++count;
  }
  return count;
}

}  // namespace oracle
