/*
 * Exact shortest-path distance tables, one BFS per goal vertex.
 *
 * Tables are built lazily on first lookup and memoized by goal, so repeated
 * queries are plain array reads. Completed tables are immutable; a cache is
 * meant to be owned by a single solver (one per worker in the harness).
 */
#pragma once

#include <cstdint>
#include <limits>
#include <list>
#include <memory>
#include <unordered_map>
#include <vector>

#include "mapf/grid.hpp"

namespace mapf {

// ranks strictly last in any preference comparison
inline constexpr int32_t kUnreachable = std::numeric_limits<int32_t>::max();

struct DistanceTable {
  int32_t goal;
  std::vector<int32_t> dist;  // per vertex; kUnreachable sentinel

  int32_t operator[](int32_t v) const { return dist[v]; }
};

DistanceTable build_distance_table(const GridMap& map, int32_t goal);

class DistanceCache {
 public:
  // cap = 0 keeps every table; otherwise least-recently-used eviction
  explicit DistanceCache(const GridMap& map, size_t cap = 0) : map_(&map), cap_(cap) {}

  const DistanceTable& table(int32_t goal);
  int32_t dist(int32_t v, int32_t goal) { return table(goal).dist[v]; }
  size_t size() const { return tables_.size(); }

 private:
  struct Entry {
    std::unique_ptr<DistanceTable> table;
    std::list<int32_t>::iterator lru_pos;
  };
  const GridMap* map_;
  size_t cap_;
  std::unordered_map<int32_t, Entry> tables_;
  std::list<int32_t> lru_;  // front = most recent
};

}  // namespace mapf
