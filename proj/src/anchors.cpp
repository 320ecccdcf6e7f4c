#include "mamove/placement.hpp"

#include "mamove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mamove {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kCoincident = 1e-15;

Eigen::Vector2d clip(const Eigen::Vector2d& p, double side, Topology topology) {
  if (topology == Topology::Segment1D) return {std::clamp(p.x(), 0.0, side), 0.0};
  return {std::clamp(p.x(), 0.0, side), std::clamp(p.y(), 0.0, side)};
}

// Upper bound on how many points fit at pairwise distance d inside the
// region: disks of radius d/2 around them lie in the region grown by d/2,
// and no packing beats the hexagonal density pi / sqrt(12).
double packing_capacity(double side, double d, Topology topology) {
  if (topology == Topology::Segment1D) return std::floor(side / d) + 1.0;
  const double grown = side + d;
  return 2.0 * grown * grown / (std::sqrt(3.0) * d * d);
}

}  // namespace

AnchorResult separate_anchors(const Deployment& deployment, double d_min, double region_side, Topology topology) {
  if (!(d_min >= 0.0)) throw InvalidArgument("minimum spacing must be non-negative");
  AnchorResult out{deployment, 0, true};
  const auto n = static_cast<Eigen::Index>(deployment.size());
  if (d_min == 0.0 || n < 2) return out;
  if (static_cast<double>(n) > packing_capacity(region_side, d_min, topology) + 1e-9)
    throw InfeasibleSpacing(std::to_string(n) + " antennas cannot be spaced " + std::to_string(d_min) +
                            " apart inside a region of side " + std::to_string(region_side));

  Eigen::Matrix2Xd& z = out.anchors.matrix();
  out.satisfied = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool violated = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        Eigen::Vector2d diff = z.col(j) - z.col(i);
        const double dist = diff.norm();
        if (dist >= d_min - 1e-12) continue;
        violated = true;
        Eigen::Vector2d u = dist > kCoincident ? Eigen::Vector2d(diff / dist) : Eigen::Vector2d(1.0, 0.0);
        if (topology == Topology::Segment1D) u = {u.x() >= 0.0 ? 1.0 : -1.0, 0.0};
        const double half = 0.5 * (d_min - dist);
        const Eigen::Vector2d pi = z.col(i) - u * half;
        const Eigen::Vector2d pj = z.col(j) + u * half;
        const Eigen::Vector2d ci = clip(pi, region_side, topology);
        const Eigen::Vector2d cj = clip(pj, region_side, topology);
        z.col(i) = ci;
        z.col(j) = cj;
        // A wall absorbed part of one push: hand the remainder to the partner.
        const double left = d_min - (cj - ci).norm();
        if (left > 0.0) {
          if ((ci - pi).norm() > 0.0 && (cj - pj).norm() == 0.0)
            z.col(j) = clip(cj + u * left, region_side, topology);
          else if ((cj - pj).norm() > 0.0 && (ci - pi).norm() == 0.0)
            z.col(i) = clip(ci - u * left, region_side, topology);
        }
      }
    }
    out.sweeps = sweep + 1;
    if (!violated) {
      out.satisfied = true;
      break;
    }
  }
  if (!out.satisfied) out.satisfied = out.anchors.min_pairwise_distance() >= d_min - 1e-9;
  return out;
}

}  // namespace mamove
