#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace mamove {

/// Antenna coordinates, one column per antenna, in wavelength units.
/// In Segment1D mode every y coordinate is zero.
class Deployment {
 public:
  Deployment() = default;
  explicit Deployment(Eigen::Matrix2Xd positions) : positions_(std::move(positions)) {}

  static Deployment from_x(std::span<const double> xs);
  static Deployment from_xy(std::span<const double> xs, std::span<const double> ys);

  std::size_t size() const { return static_cast<std::size_t>(positions_.cols()); }
  Eigen::Vector2d operator[](std::size_t n) const { return positions_.col(static_cast<Eigen::Index>(n)); }
  void set(std::size_t n, const Eigen::Vector2d& p) { positions_.col(static_cast<Eigen::Index>(n)) = p; }

  const Eigen::Matrix2Xd& matrix() const { return positions_; }
  Eigen::Matrix2Xd& matrix() { return positions_; }

  bool all_finite() const { return positions_.allFinite(); }
  /// Smallest distance over distinct pairs; +inf for fewer than two antennas.
  double min_pairwise_distance() const;
  Deployment translated(const Eigen::Vector2d& offset) const;

  friend bool operator==(const Deployment& a, const Deployment& b) {
    return a.positions_.cols() == b.positions_.cols() && a.positions_ == b.positions_;
  }

 private:
  Eigen::Matrix2Xd positions_;
};

enum class Topology { Segment1D, Square2D };

/// Raw inputs for a Scenario. Lengths are in wavelengths, powers in watts,
/// angles in radians, times in seconds.
struct ScenarioSpec {
  Topology topology = Topology::Square2D;
  double wavelength = 1.0;
  std::vector<double> elevation;  // theta_k
  std::vector<double> azimuth;    // phi_k, ignored in Segment1D mode
  std::vector<double> fading;     // beta_k
  double noise_power = 1.0;
  double total_power = 1.0;
  double interval = 1.0;
  double region_side = 1.0;
  double min_spacing = 0.0;
  double max_speed = 0.0;
  Deployment initial;
};

/// Immutable, validated problem instance.
class Scenario {
 public:
  /// Throws InvalidArgument when any invariant fails: K > N, angles out of
  /// [-pi/2, pi/2], non-positive powers or fading, initial antennas outside
  /// the region or closer than the minimum spacing.
  explicit Scenario(ScenarioSpec spec);

  const ScenarioSpec& spec() const { return spec_; }

  std::size_t num_antennas() const { return spec_.initial.size(); }
  std::size_t num_users() const { return spec_.elevation.size(); }
  Topology topology() const { return spec_.topology; }
  double wavelength() const { return spec_.wavelength; }
  double wavenumber() const;  // 2*pi/lambda
  double noise_power() const { return spec_.noise_power; }
  double total_power() const { return spec_.total_power; }
  double snr_scale() const { return spec_.total_power / spec_.noise_power; }
  double interval() const { return spec_.interval; }
  double region_side() const { return spec_.region_side; }
  double min_spacing() const { return spec_.min_spacing; }
  double max_speed() const { return spec_.max_speed; }
  double fading(std::size_t k) const { return spec_.fading[k]; }
  const Deployment& initial() const { return spec_.initial; }

  /// Direction vector b_k. Segment1D reduces it to (cos theta_k, 0).
  Eigen::Vector2d direction(std::size_t k) const;

  /// True when the point lies in the movement region within `tol`.
  bool in_region(const Eigen::Vector2d& p, double tol = 0.0) const;

 private:
  ScenarioSpec spec_;
};

/// beta_k = beta0 * d^-alpha0.
double fading_from_distance(double beta0, double alpha0, double distance_m);

/// 10^((dBm - 30) / 10) watts.
double dbm_to_watts(double dbm);

}  // namespace mamove
