#include "mamove/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mamove {

namespace {

Eigen::Vector2d clip_box(const Eigen::Vector2d& p, double side) {
  return {std::clamp(p.x(), 0.0, side), std::clamp(p.y(), 0.0, side)};
}

Eigen::Vector2d onto_disk(const Eigen::Vector2d& p, const Eigen::Vector2d& c, double r) {
  const Eigen::Vector2d d = p - c;
  const double len = d.norm();
  if (len <= r) return p;
  return c + d * (r / len);
}

constexpr int kMaxDykstraIters = 200000;

}  // namespace

Eigen::Vector2d project_box_disk(const Eigen::Vector2d& point, const Eigen::Vector2d& center, double radius,
                                 double region_side, Topology topology, double tol) {
  if (radius <= 0.0) return center;

  if (topology == Topology::Segment1D) {
    const double lo = std::max(0.0, center.x() - radius);
    const double hi = std::min(region_side, center.x() + radius);
    return {std::clamp(point.x(), lo, hi), 0.0};
  }

  // Clipping a disk point to the box never leaves the disk (the center is in
  // the box, so each coordinate only moves toward it). Both fast paths below
  // are therefore exact nearest points.
  const Eigen::Vector2d boxed = clip_box(point, region_side);
  if ((boxed - center).norm() <= radius) return boxed;
  const Eigen::Vector2d disked = onto_disk(point, center, radius);
  if (clip_box(disked, region_side) == disked) return disked;

  Eigen::Vector2d x = point;
  Eigen::Vector2d box_inc = Eigen::Vector2d::Zero();
  Eigen::Vector2d disk_inc = Eigen::Vector2d::Zero();
  for (int it = 0; it < kMaxDykstraIters; ++it) {
    const Eigen::Vector2d y = clip_box(x + box_inc, region_side);
    box_inc = x + box_inc - y;
    const Eigen::Vector2d next = onto_disk(y + disk_inc, center, radius);
    disk_inc = y + disk_inc - next;
    const double moved = (next - x).norm();
    x = next;
    if (moved < tol && (clip_box(x, region_side) - x).norm() < tol) break;
  }
  // x is in the disk; clipping keeps it there and makes box membership exact.
  return clip_box(x, region_side);
}

}  // namespace mamove
