#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hetnet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_norm(Point2 p) noexcept { return p.x * p.x + p.y * p.y; }

/// Static bucket grid over the square [-half_width, half_width]^2, stored CSR-style.
class SpatialGrid {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  SpatialGrid(std::span<const Point2> points, double half_width, double cell_size);

  struct Hit {
    std::size_t index = npos;
    double dist2 = std::numeric_limits<double>::infinity();
  };

  /// Closest point to q (index npos when the grid is empty).
  Hit nearest(Point2 q) const;
  /// Closest point to q among those at distance < r_max (index npos if none).
  Hit nearest_within(Point2 q, double r_max) const;
  /// True if some point lies at distance <= r from q.
  bool any_within(Point2 q, double r) const;

  std::size_t size() const noexcept { return points_.size(); }

 private:
  int cell_coord(double v) const noexcept;

  std::span<const Point2> points_;
  double half_width_;
  double cell_;
  int dim_;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> order_;
};

}  // namespace hetnet
