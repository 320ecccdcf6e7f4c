#include "mamove/stationarity.hpp"

#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/gradients.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace mamove {

std::string_view to_string(MoveDecision decision) { return decision == MoveDecision::Stay ? "stay" : "move"; }

std::string_view to_string(SpecialCase c) { return c == SpecialCase::P31 ? "P31" : "P32"; }

ThresholdReport thresholds_from(double initial_rate, double gradient_norm_sum, double interval, double max_speed) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  ThresholdReport r;
  r.initial_rate = initial_rate;
  r.gradient_norm_sum = gradient_norm_sum;
  if (gradient_norm_sum < kZeroGradientTol) {
    r.zero_gradient = true;
    r.v_th = inf;
    r.t_th = inf;
    r.decision = MoveDecision::Stay;
    return r;
  }
  r.v_th = initial_rate / (interval * gradient_norm_sum);
  r.t_th = max_speed > 0.0 ? initial_rate / (max_speed * gradient_norm_sum) : inf;
  r.decision = max_speed <= r.v_th ? MoveDecision::Stay : MoveDecision::Move;
  return r;
}

ThresholdReport speed_threshold(const Scenario& scenario) {
  const Deployment& start = scenario.initial();
  const double r0 = achievable_rate(scenario, start);
  const double sum = grad_rate(scenario, start).norm_sum();
  return thresholds_from(r0, sum, scenario.interval(), scenario.max_speed());
}

double time_threshold(const Scenario& scenario) {
  if (!(scenario.max_speed() > 0.0)) throw InvalidArgument("time threshold needs a positive maximum speed");
  const ThresholdReport r = speed_threshold(scenario);
  if (r.zero_gradient) throw ZeroGradient("initial deployment is a stationary point of the rate");
  return r.t_th;
}

double special_case_rate(double x1, double x2, double eps, double snr_scale) {
  if (eps == 0.0) throw InvalidArgument("eps must be non-zero");
  const double s = std::sin(0.5 * eps * (x1 - x2));
  return std::log2(1.0 + snr_scale * s * s);
}

SpecialCaseParams special_case_params(SpecialCase c) {
  SpecialCaseParams p;
  p.eps = std::numbers::pi / 4.0;
  if (c == SpecialCase::P31) {
    p.x1 = 4.0;
    p.x2 = 6.0;
  } else {
    p.x1 = 5.0;
    p.x2 = 5.5;
  }
  p.initial_spacing = p.x2 - p.x1;
  p.t_mov_max = (p.optimal_spacing - p.initial_spacing) / (2.0 * p.max_speed);
  return p;
}

double special_case_throughput(SpecialCase c, double max_speed, double t_mov) {
  const SpecialCaseParams p = special_case_params(c);
  if (!(t_mov >= 0.0 && t_mov <= p.interval)) throw InvalidArgument("duration outside [0, T]");
  const double spacing = std::min(p.initial_spacing + 2.0 * max_speed * t_mov, p.optimal_spacing);
  return (p.interval - t_mov) * special_case_rate(0.0, spacing, p.eps, p.snr_scale);
}

double special_case_objective(SpecialCase c, double t_mov) {
  const SpecialCaseParams p = special_case_params(c);
  if (!(t_mov >= 0.0 && t_mov <= p.t_mov_max)) throw InvalidArgument("duration outside [0, t_mov_max]");
  return special_case_throughput(c, p.max_speed, t_mov);
}

double special_case_speed_threshold(SpecialCase c) {
  const SpecialCaseParams p = special_case_params(c);
  const double delta = p.x1 - p.x2;
  const double s = std::sin(0.5 * p.eps * delta);
  const double r0 = std::log2(1.0 + p.snr_scale * s * s);
  // dR/dDelta for R = log2(1 + snr sin^2(eps Delta / 2)); both antennas see |dR/dDelta|.
  const double d_rate = p.snr_scale * 0.5 * p.eps * std::sin(p.eps * delta) / (std::numbers::ln2 * (1.0 + p.snr_scale * s * s));
  return r0 / (p.interval * 2.0 * std::abs(d_rate));
}

std::vector<ThresholdPoint> verify_threshold(SpecialCase c, std::span<const double> max_speeds) {
  const SpecialCaseParams p = special_case_params(c);
  std::vector<ThresholdPoint> out;
  out.reserve(max_speeds.size());
  const auto steps = static_cast<long>(std::ceil(p.interval / kVerifyGridStep));
  for (double v : max_speeds) {
    double best_t = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (long i = 0; i < steps; ++i) {
      const double t = static_cast<double>(i) * kVerifyGridStep;
      if (t >= p.interval) break;
      const double val = special_case_throughput(c, v, t);
      if (val > best) {
        best = val;
        best_t = t;
      }
    }
    out.push_back({v, best_t});
  }
  return out;
}

Scenario special_case_scenario(SpecialCase c, double max_speed) {
  const SpecialCaseParams p = special_case_params(c);
  ScenarioSpec spec;
  spec.topology = Topology::Segment1D;
  spec.wavelength = 1.0;
  // eps = 2 pi (cos theta_2 - cos theta_1) = pi / 4.
  spec.elevation = {std::numbers::pi / 2.0, std::acos(1.0 / 8.0)};
  spec.azimuth = {0.0, 0.0};
  spec.fading = {1.0, 1.0};
  spec.noise_power = 1.0;
  spec.total_power = p.snr_scale;
  spec.interval = p.interval;
  spec.region_side = 10.0;
  spec.min_spacing = 0.5;
  spec.max_speed = max_speed;
  const std::array<double, 2> xs{p.x1, p.x2};
  spec.initial = Deployment::from_x(xs);
  return Scenario(std::move(spec));
}

}  // namespace mamove
