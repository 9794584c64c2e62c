#include "hetnet/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

SpatialGrid::SpatialGrid(std::span<const Point2> points, double half_width, double cell_size)
    : points_(points), half_width_(half_width), cell_(cell_size) {
  if (!(half_width > 0.0) || !(cell_size > 0.0)) throw std::invalid_argument("SpatialGrid: bad geometry");
  dim_ = std::max(1, static_cast<int>(std::ceil(2.0 * half_width / cell_size)));
  const std::size_t cells = static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_);
  start_.assign(cells + 1, 0);
  std::vector<std::uint32_t> cell_of(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto c = static_cast<std::uint32_t>(cell_coord(points[i].y) * dim_ + cell_coord(points[i].x));
    cell_of[i] = c;
    ++start_[c + 1];
  }
  for (std::size_t c = 0; c < cells; ++c) start_[c + 1] += start_[c];
  order_.resize(points.size());
  std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) order_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
}

int SpatialGrid::cell_coord(double v) const noexcept {
  const int c = static_cast<int>(std::floor((v + half_width_) / cell_));
  return std::clamp(c, 0, dim_ - 1);
}

SpatialGrid::Hit SpatialGrid::nearest(Point2 q) const {
  return nearest_within(q, std::numeric_limits<double>::infinity());
}

SpatialGrid::Hit SpatialGrid::nearest_within(Point2 q, double r_max) const {
  Hit best;
  best.dist2 = r_max * r_max;
  if (points_.empty() || !(r_max > 0.0)) return {};
  const int cx = cell_coord(q.x);
  const int cy = cell_coord(q.y);
  // Queries outside the grid box start from a clamped cell, so the ring bound is offset.
  const double outside = std::max({0.0, std::abs(q.x) - half_width_, std::abs(q.y) - half_width_});
  for (int ring = 0; ring <= dim_; ++ring) {
    const int x0 = cx - ring, x1 = cx + ring, y0 = cy - ring, y1 = cy + ring;
    for (int y = std::max(0, y0); y <= std::min(dim_ - 1, y1); ++y) {
      const bool edge_row = (y == y0 || y == y1);
      for (int x = std::max(0, x0); x <= std::min(dim_ - 1, x1); ++x) {
        if (!edge_row && x != x0 && x != x1) {
          x = x1 - 1;
          continue;
        }
        const std::size_t c = static_cast<std::size_t>(y) * dim_ + x;
        for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k) {
          const Point2 p = points_[order_[k]];
          const double d2 = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
          if (d2 < best.dist2) best = {order_[k], d2};
        }
      }
    }
    const double reach = std::max(0.0, ring * cell_ - outside);
    if (best.dist2 <= reach * reach) break;
  }
  if (best.index == npos) return {};
  return best;
}

bool SpatialGrid::any_within(Point2 q, double r) const {
  if (points_.empty() || r < 0.0) return false;
  const int x0 = cell_coord(q.x - r), x1 = cell_coord(q.x + r);
  const int y0 = cell_coord(q.y - r), y1 = cell_coord(q.y + r);
  const double r2 = r * r;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const std::size_t c = static_cast<std::size_t>(y) * dim_ + x;
      for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k) {
        const Point2 p = points_[order_[k]];
        if ((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) <= r2) return true;
      }
    }
  }
  return false;
}

}  // namespace hetnet
