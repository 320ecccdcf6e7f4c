#pragma once

#include <array>
#include <span>
#include <string_view>

namespace mamove {

enum class FitKind { Quadratic, Sigmoidal };

std::string_view to_string(FitKind kind);

struct RateSample {
  double t_mov = 0.0;
  double rate = 0.0;
};

/// Rate-versus-duration approximation g(t).
///   Quadratic  g(t) = C1 (t - C2)^2 + C3          with C1 < 0, C2 > 0, C3 > 0
///   Sigmoidal  g(t) = C1 + C2 / (1 + exp(-(C3 + C4 t)))   with C2 > 0, C4 > 0
struct FitModel {
  FitKind kind = FitKind::Quadratic;
  std::array<double, 4> coeffs{};  // C1..C4; C4 unused for Quadratic
  double residual_sse = 0.0;
  int sample_count = 0;
  int iterations = 0;

  double operator()(double t) const;
};

/// Least-squares fit of one model family. Quadratic is solved exactly on the
/// monomial basis; Sigmoidal uses damped Gauss-Newton from a data-driven
/// start. Throws InvalidArgument for too few or repeated abscissae and
/// FitDiverged when the result violates the sign constraints or does not
/// beat the best constant fit.
FitModel fit_rate_model(std::span<const RateSample> samples, FitKind kind);

/// SSE of the best constant model (the sample mean).
double constant_model_sse(std::span<const RateSample> samples);

/// Starting coefficients for the sigmoid fit.
std::array<double, 4> sigmoid_initial_guess(std::span<const RateSample> samples);

}  // namespace mamove
