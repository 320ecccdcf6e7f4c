#include "mamove/scenario.hpp"

#include "mamove/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mamove {

Deployment Deployment::from_x(std::span<const double> xs) {
  Eigen::Matrix2Xd m = Eigen::Matrix2Xd::Zero(2, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t n = 0; n < xs.size(); ++n) m(0, static_cast<Eigen::Index>(n)) = xs[n];
  return Deployment(std::move(m));
}

Deployment Deployment::from_xy(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("x and y coordinate lists differ in length");
  Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t n = 0; n < xs.size(); ++n) {
    m(0, static_cast<Eigen::Index>(n)) = xs[n];
    m(1, static_cast<Eigen::Index>(n)) = ys[n];
  }
  return Deployment(std::move(m));
}

double Deployment::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < positions_.cols(); ++i)
    for (Eigen::Index j = i + 1; j < positions_.cols(); ++j)
      best = std::min(best, (positions_.col(i) - positions_.col(j)).norm());
  return best;
}

Deployment Deployment::translated(const Eigen::Vector2d& offset) const {
  Eigen::Matrix2Xd m = positions_;
  m.colwise() += offset;
  return Deployment(std::move(m));
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument(msg);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

Scenario::Scenario(ScenarioSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = spec_.initial.size();
  const std::size_t k = spec_.elevation.size();
  constexpr double half_pi = std::numbers::pi / 2.0;
  // Angles are compared with a small slack so that values typed as pi/2 pass.
  constexpr double angle_slack = 1e-12;

  require(n > 0, "scenario needs at least one antenna");
  require(k > 0, "scenario needs at least one user");
  require(k <= n, "zero-forcing needs K <= N (got K=" + std::to_string(k) + ", N=" + std::to_string(n) + ")");
  require(spec_.fading.size() == k, "fading list must have one entry per user");
  if (spec_.topology == Topology::Square2D)
    require(spec_.azimuth.size() == k, "azimuth list must have one entry per user");
  else if (spec_.azimuth.empty())
    spec_.azimuth.assign(k, 0.0);
  else
    require(spec_.azimuth.size() == k, "azimuth list must have one entry per user");

  for (std::size_t u = 0; u < k; ++u) {
    require(std::isfinite(spec_.elevation[u]) && std::abs(spec_.elevation[u]) <= half_pi + angle_slack,
            "elevation angles must lie in [-pi/2, pi/2]");
    require(std::isfinite(spec_.azimuth[u]) && std::abs(spec_.azimuth[u]) <= half_pi + angle_slack,
            "azimuth angles must lie in [-pi/2, pi/2]");
    require(finite_positive(spec_.fading[u]), "fading coefficients must be positive");
  }
  require(finite_positive(spec_.wavelength), "wavelength must be positive");
  require(finite_positive(spec_.noise_power), "noise power must be positive");
  require(finite_positive(spec_.total_power), "total power must be positive");
  require(finite_positive(spec_.interval), "interval T must be positive");
  require(finite_positive(spec_.region_side), "region side L must be positive");
  require(std::isfinite(spec_.min_spacing) && spec_.min_spacing >= 0.0, "minimum spacing must be >= 0");
  require(std::isfinite(spec_.max_speed) && spec_.max_speed >= 0.0, "maximum speed must be >= 0");
  require(spec_.initial.all_finite(), "initial positions must be finite");

  for (std::size_t a = 0; a < n; ++a) {
    require(in_region(spec_.initial[a], 1e-12), "initial antenna " + std::to_string(a) + " lies outside the region");
    if (spec_.topology == Topology::Segment1D)
      require(spec_.initial[a].y() == 0.0, "Segment1D initial positions must have y = 0");
  }
  // Same slack as the optimizer's spacing repair.
  require(spec_.initial.min_pairwise_distance() >= spec_.min_spacing - 1e-9,
          "initial antennas violate the minimum spacing");
}

double Scenario::wavenumber() const { return 2.0 * std::numbers::pi / spec_.wavelength; }

Eigen::Vector2d Scenario::direction(std::size_t k) const {
  const double theta = spec_.elevation[k];
  if (spec_.topology == Topology::Segment1D) return {std::cos(theta), 0.0};
  return {std::cos(theta) * std::sin(spec_.azimuth[k]), std::sin(theta)};
}

bool Scenario::in_region(const Eigen::Vector2d& p, double tol) const {
  const double l = spec_.region_side;
  if (p.x() < -tol || p.x() > l + tol) return false;
  if (spec_.topology == Topology::Segment1D) return std::abs(p.y()) <= tol;
  return p.y() >= -tol && p.y() <= l + tol;
}

double fading_from_distance(double beta0, double alpha0, double distance_m) {
  if (!(beta0 > 0.0) || !(distance_m > 0.0)) throw InvalidArgument("beta0 and distance must be positive");
  return beta0 * std::pow(distance_m, -alpha0);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

}  // namespace mamove
