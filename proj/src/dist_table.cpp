#include "mapf/dist_table.hpp"

#include <queue>

namespace mapf {

DistanceTable build_distance_table(const GridMap& map, int32_t goal)
{
  DistanceTable t{goal, std::vector<int32_t>(map.num_vertices(), kUnreachable)};
  t.dist[goal] = 0;
  std::queue<int32_t> open;
  open.push(goal);
  while (!open.empty()) {
    const int32_t v = open.front();
    open.pop();
    const int32_t d = t.dist[v];
    for (const int32_t u : map.neighbors(v)) {
      if (t.dist[u] == kUnreachable) {
        t.dist[u] = d + 1;
        open.push(u);
      }
    }
  }
  return t;
}

const DistanceTable& DistanceCache::table(int32_t goal)
{
  auto it = tables_.find(goal);
  if (it != tables_.end()) {
    if (cap_ > 0) lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
    return *it->second.table;
  }
  if (cap_ > 0 && tables_.size() >= cap_) {
    tables_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(goal);
  auto table = std::make_unique<DistanceTable>(build_distance_table(*map_, goal));
  auto& entry = tables_[goal];
  entry.table = std::move(table);
  entry.lru_pos = lru_.begin();
  return *entry.table;
}

}  // namespace mapf
