#pragma once

#include "mamove/scenario.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace mamove {

enum class MoveDecision { Stay, Move };

std::string_view to_string(MoveDecision decision);

/// First-order stay/move thresholds at the initial deployment.
///
/// V_th = R0 / (T * sum_n |grad_n R|) and T_th = R0 / (V_max * sum_n |grad_n R|).
/// Staying put is optimal when V_max <= V_th (equivalently T <= T_th). When
/// the gradient sum vanishes the start is stationary: `zero_gradient` is set,
/// both thresholds are +inf and the decision is Stay.
struct ThresholdReport {
  double v_th = 0.0;
  double t_th = 0.0;
  double initial_rate = 0.0;
  double gradient_norm_sum = 0.0;
  MoveDecision decision = MoveDecision::Stay;
  bool zero_gradient = false;
};

/// Gradient sums below this count as a stationary start.
inline constexpr double kZeroGradientTol = 1e-12;

/// Builds the report from its two measured ingredients. T_th is +inf when
/// V_max is zero.
ThresholdReport thresholds_from(double initial_rate, double gradient_norm_sum, double interval, double max_speed);

ThresholdReport speed_threshold(const Scenario& scenario);

/// T_th in seconds. Throws ZeroGradient for a stationary start and
/// InvalidArgument when V_max is not positive.
double time_threshold(const Scenario& scenario);

/// log2(1 + snr_scale * sin^2(eps (x1 - x2) / 2)), the two-antenna two-user
/// rate on a line. `eps` is the angular difference 2 pi (cos theta_2 - cos theta_1) / lambda.
double special_case_rate(double x1, double x2, double eps, double snr_scale);

/// The two reference line configurations: spacing starts at 2 (P31) or 0.5
/// (P32) wavelengths and the optimum spacing is 4 wavelengths.
enum class SpecialCase { P31, P32 };

std::string_view to_string(SpecialCase c);

struct SpecialCaseParams {
  double initial_spacing = 0.0;
  double interval = 5.0;
  double max_speed = 0.5;
  double eps = 0.0;  // pi / 4 per wavelength
  double snr_scale = 1.0;
  double optimal_spacing = 4.0;
  double t_mov_max = 0.0;  // time to reach the optimal spacing at max_speed
  double x1 = 0.0;
  double x2 = 0.0;
};

SpecialCaseParams special_case_params(SpecialCase c);

/// (5 - t) * log2(1 + sin^2((pi / 8)(d0 + 2 * 0.5 * t))). Throws
/// InvalidArgument outside [0, t_mov_max].
double special_case_objective(SpecialCase c, double t_mov);

/// Closed-form throughput for any speed: the spacing grows as d0 + 2 V t
/// until it reaches the optimum and then stays there.
double special_case_throughput(SpecialCase c, double max_speed, double t_mov);

/// Closed-form V_th for the case, from the analytic rate derivative.
double special_case_speed_threshold(SpecialCase c);

struct ThresholdPoint {
  double max_speed = 0.0;
  double t_star = 0.0;
};

/// Grid search step for verify_threshold.
inline constexpr double kVerifyGridStep = 1e-4;

/// For each speed, the duration maximizing the closed-form throughput on
/// [0, T) (grid step kVerifyGridStep, ties to the smallest duration).
std::vector<ThresholdPoint> verify_threshold(SpecialCase c, std::span<const double> max_speeds);

/// Scenario matching a special case through the full channel model:
/// Segment1D, N = K = 2, L = 10, d_min = 0.5, beta = P = sigma^2 = 1 and
/// theta_1 = pi/2, cos theta_2 = 1/8.
Scenario special_case_scenario(SpecialCase c, double max_speed = 0.5);

}  // namespace mamove
