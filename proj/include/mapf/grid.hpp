/*
 * 4-connected grid graph with MovingAI .map parsing and map generators.
 *
 * Passable cells get dense vertex ids in row-major order; all solver code
 * works on these ids. Neighbor lists are precomputed in a fixed
 * up, down, left, right order so runs are reproducible.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapf {

struct MapParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  int x;  // column
  int y;  // row
};

using Config = std::vector<int32_t>;  // one vertex per agent

class GridMap {
 public:
  // MovingAI .map grammar: type/height/width/map header, then H rows of
  // W characters; '.' and 'G' passable, '@', 'O', 'T' blocked.
  static GridMap parse(std::string_view text);
  static GridMap from_mask(int width, int height, const std::vector<uint8_t>& passable);

  int width() const { return width_; }
  int height() const { return height_; }
  int num_cells() const { return width_ * height_; }
  int num_vertices() const { return static_cast<int>(cell_of_.size()); }

  bool in_bounds(int x, int y) const { return 0 <= x && x < width_ && 0 <= y && y < height_; }
  bool passable(int x, int y) const { return in_bounds(x, y) && passable_[y * width_ + x]; }

  // dense vertex id at (x, y); -1 if blocked or out of bounds
  int32_t id_at(int x, int y) const
  {
    return in_bounds(x, y) ? vertex_id_[y * width_ + x] : -1;
  }
  Cell coord_of(int32_t v) const
  {
    const int32_t c = cell_of_[v];
    return {c % width_, c / width_};
  }

  // passable 4-neighbors of v in up, down, left, right order; never contains v
  std::span<const int32_t> neighbors(int32_t v) const
  {
    return {neighbor_data_.data() + 5 * v, static_cast<size_t>(neighbor_count_[v])};
  }
  int degree(int32_t v) const { return neighbor_count_[v]; }
  int max_degree() const { return max_degree_; }

  std::string serialize() const;  // canonical MovingAI text ('.' / '@')

  // every free cell reachable from every other
  bool connected() const;

 private:
  GridMap() = default;
  void build_graph();

  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> passable_;     // per cell
  std::vector<int32_t> vertex_id_;    // per cell, -1 if blocked
  std::vector<int32_t> cell_of_;      // per vertex, row-major cell index
  std::vector<int32_t> neighbor_data_;  // 5 slots per vertex
  std::vector<uint8_t> neighbor_count_;
  int max_degree_ = 0;
};

// Isolated single-cell obstacles on the odd-odd lattice (period 2 in both
// axes); free cells stay mutually connected. rows, cols >= 3.
GridMap generate_sortation_map(int rows, int cols);

GridMap generate_empty_map(int rows, int cols);

// exactly num_obstacles blocked cells, free region connected; deterministic per seed
GridMap generate_random_map(int rows, int cols, int num_obstacles, uint64_t seed);

// warehouse-style layout: rectangular shelf blocks separated by aisles
GridMap generate_warehouse_map(int rows, int cols, int shelf_w = 10, int shelf_h = 2,
                               int aisle = 2, int margin = 4);

}  // namespace mapf
