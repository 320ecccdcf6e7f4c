#pragma once

#include "mamove/scenario.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace mamove::test {

inline constexpr double kPi = std::numbers::pi;

/// Unit-power scenario with random angles and antennas at least 0.5 apart.
inline Scenario random_scenario(std::mt19937_64& rng, std::size_t n, std::size_t k, Topology topo,
                                double side = 10.0) {
  std::uniform_real_distribution<double> angle(-kPi / 2, kPi / 2);
  std::uniform_real_distribution<double> pos(0.0, side);
  std::uniform_real_distribution<double> fade(0.5, 2.0);
  ScenarioSpec spec;
  spec.topology = topo;
  for (std::size_t u = 0; u < k; ++u) {
    spec.elevation.push_back(angle(rng));
    spec.azimuth.push_back(topo == Topology::Square2D ? angle(rng) : 0.0);
    spec.fading.push_back(fade(rng));
  }
  spec.noise_power = 1.0;
  spec.total_power = 10.0;
  spec.interval = 8.0;
  spec.region_side = side;
  spec.min_spacing = 0.5;
  spec.max_speed = 1.0;
  Eigen::Matrix2Xd a(2, static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n;) {
    const Eigen::Vector2d p(pos(rng), topo == Topology::Square2D ? pos(rng) : 0.0);
    bool far = true;
    for (std::size_t j = 0; j < i; ++j) far = far && (p - a.col(static_cast<Eigen::Index>(j))).norm() >= 0.5;
    if (!far) continue;
    a.col(static_cast<Eigen::Index>(i++)) = p;
  }
  spec.initial = Deployment(a);
  return Scenario(spec);
}

/// Small line scenario used across suites.
inline ScenarioSpec line_spec(std::vector<double> xs, std::vector<double> elevation) {
  ScenarioSpec spec;
  spec.topology = Topology::Segment1D;
  spec.elevation = std::move(elevation);
  spec.fading.assign(spec.elevation.size(), 1.0);
  spec.noise_power = 1.0;
  spec.total_power = 1.0;
  spec.interval = 5.0;
  spec.region_side = 10.0;
  spec.min_spacing = 0.5;
  spec.max_speed = 1.0;
  spec.initial = Deployment::from_x(xs);
  return spec;
}

}  // namespace mamove::test
