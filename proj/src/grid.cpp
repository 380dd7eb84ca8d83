#include "mapf/grid.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

#include "mapf/rng.hpp"

namespace mapf {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

[[noreturn]] void fail(int line_no, const std::string& what)
{
  throw MapParseError("map parse error at line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

GridMap GridMap::parse(std::string_view text)
{
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

  if (lines.size() < 4) fail(static_cast<int>(lines.size()), "incomplete header");
  if (trim(lines[0]) != "type octile") fail(1, "expected 'type octile'");

  const auto parse_dim = [&](std::string_view line, std::string_view key, int line_no) {
    const auto t = trim(line);
    if (t.substr(0, key.size()) != key) {
      fail(line_no, "expected '" + std::string(key) + " <int>'");
    }
    const auto num = trim(t.substr(key.size()));
    int value = 0;
    const auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || p != num.data() + num.size() || value <= 0) {
      fail(line_no, "bad integer in '" + std::string(key) + "'");
    }
    return value;
  };

  GridMap g;
  g.height_ = parse_dim(lines[1], "height", 2);
  g.width_ = parse_dim(lines[2], "width", 3);
  if (trim(lines[3]) != "map") fail(4, "expected 'map'");

  if (static_cast<int>(lines.size()) - 4 != g.height_) {
    fail(static_cast<int>(lines.size()),
         "expected " + std::to_string(g.height_) + " grid rows, got " +
             std::to_string(lines.size() - 4));
  }

  g.passable_.assign(static_cast<size_t>(g.width_) * g.height_, 0);
  for (int y = 0; y < g.height_; ++y) {
    const auto row = trim(lines[4 + y]);
    const int line_no = 5 + y;
    if (static_cast<int>(row.size()) != g.width_) {
      fail(line_no, "row length " + std::to_string(row.size()) + " != width " +
                        std::to_string(g.width_));
    }
    for (int x = 0; x < g.width_; ++x) {
      const char c = row[x];
      if (c == '.' || c == 'G') {
        g.passable_[y * g.width_ + x] = 1;
      } else if (c == '@' || c == 'T' || c == 'O') {
        g.passable_[y * g.width_ + x] = 0;
      } else {
        fail(line_no, std::string("unknown cell character '") + c + "'");
      }
    }
  }
  g.build_graph();
  return g;
}

GridMap GridMap::from_mask(int width, int height, const std::vector<uint8_t>& passable)
{
  if (width <= 0 || height <= 0 ||
      passable.size() != static_cast<size_t>(width) * static_cast<size_t>(height)) {
    throw MapParseError("from_mask: mask size does not match dimensions");
  }
  GridMap g;
  g.width_ = width;
  g.height_ = height;
  g.passable_ = passable;
  g.build_graph();
  return g;
}

void GridMap::build_graph()
{
  vertex_id_.assign(passable_.size(), -1);
  cell_of_.clear();
  for (int c = 0; c < num_cells(); ++c) {
    if (passable_[c]) {
      vertex_id_[c] = static_cast<int32_t>(cell_of_.size());
      cell_of_.push_back(c);
    }
  }
  const int n = num_vertices();
  neighbor_data_.assign(static_cast<size_t>(n) * 5, -1);
  neighbor_count_.assign(n, 0);
  max_degree_ = 0;
  for (int32_t v = 0; v < n; ++v) {
    const auto [x, y] = coord_of(v);
    // up, down, left, right
    const int dx[4] = {0, 0, -1, 1};
    const int dy[4] = {-1, 1, 0, 0};
    for (int k = 0; k < 4; ++k) {
      const int32_t u = id_at(x + dx[k], y + dy[k]);
      if (u >= 0) neighbor_data_[5 * v + neighbor_count_[v]++] = u;
    }
    max_degree_ = std::max(max_degree_, static_cast<int>(neighbor_count_[v]));
  }
}

std::string GridMap::serialize() const
{
  std::ostringstream out;
  out << "type octile\n"
      << "height " << height_ << "\n"
      << "width " << width_ << "\n"
      << "map\n";
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out << (passable_[y * width_ + x] ? '.' : '@');
    out << '\n';
  }
  return out.str();
}

bool GridMap::connected() const
{
  const int n = num_vertices();
  if (n <= 1) return true;
  std::vector<uint8_t> seen(n, 0);
  std::queue<int32_t> open;
  open.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!open.empty()) {
    const int32_t v = open.front();
    open.pop();
    for (const int32_t u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        open.push(u);
      }
    }
  }
  return reached == n;
}

GridMap generate_sortation_map(int rows, int cols)
{
  if (rows < 3 || cols < 3) {
    throw MapParseError("sortation map needs rows, cols >= 3");
  }
  std::vector<uint8_t> mask(static_cast<size_t>(rows) * cols, 1);
  for (int y = 1; y < rows; y += 2) {
    for (int x = 1; x < cols; x += 2) mask[y * cols + x] = 0;
  }
  return GridMap::from_mask(cols, rows, mask);
}

GridMap generate_empty_map(int rows, int cols)
{
  return GridMap::from_mask(cols, rows, std::vector<uint8_t>(static_cast<size_t>(rows) * cols, 1));
}

GridMap generate_random_map(int rows, int cols, int num_obstacles, uint64_t seed)
{
  const int cells = rows * cols;
  if (num_obstacles < 0 || num_obstacles >= cells) {
    throw MapParseError("random map: obstacle count out of range");
  }
  // resample whole placements until the free region is connected
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(Rng::mix(seed, attempt));
    std::vector<int32_t> ids(cells);
    for (int i = 0; i < cells; ++i) ids[i] = i;
    for (int i = 0; i < num_obstacles; ++i) {
      const auto j = static_cast<int>(rng.uniform_int(i, cells - 1));
      std::swap(ids[i], ids[j]);
    }
    std::vector<uint8_t> mask(cells, 1);
    for (int i = 0; i < num_obstacles; ++i) mask[ids[i]] = 0;
    GridMap g = GridMap::from_mask(cols, rows, mask);
    if (g.connected()) return g;
  }
}

GridMap generate_warehouse_map(int rows, int cols, int shelf_w, int shelf_h, int aisle,
                               int margin)
{
  if (rows <= 2 * margin + shelf_h || cols <= 2 * margin + shelf_w) {
    throw MapParseError("warehouse map: dimensions too small for one shelf");
  }
  std::vector<uint8_t> mask(static_cast<size_t>(rows) * cols, 1);
  const int px = shelf_w + aisle;
  const int py = shelf_h + aisle;
  for (int y = margin; y + shelf_h <= rows - margin; y += py) {
    for (int x = margin; x + shelf_w <= cols - margin; x += px) {
      for (int dy = 0; dy < shelf_h; ++dy) {
        for (int dx = 0; dx < shelf_w; ++dx) mask[(y + dy) * cols + (x + dx)] = 0;
      }
    }
  }
  return GridMap::from_mask(cols, rows, mask);
}

}  // namespace mapf
