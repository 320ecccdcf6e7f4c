#include "mamove/curve_fit.hpp"

#include "mamove/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace mamove {

std::string_view to_string(FitKind kind) { return kind == FitKind::Quadratic ? "quadratic" : "sigmoidal"; }

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double sigmoid(const std::array<double, 4>& c, double t) { return c[0] + c[1] * logistic(c[2] + c[3] * t); }

double sse_of(const FitModel& m, std::span<const RateSample> samples) {
  double s = 0.0;
  for (const auto& p : samples) {
    const double r = m(p.t_mov) - p.rate;
    s += r * r;
  }
  return s;
}

void check_samples(std::span<const RateSample> samples, std::size_t minimum) {
  if (samples.size() < minimum)
    throw InvalidArgument("need at least " + std::to_string(minimum) + " samples, got " +
                          std::to_string(samples.size()));
  std::vector<double> ts;
  for (const auto& p : samples) {
    if (!std::isfinite(p.t_mov) || !std::isfinite(p.rate)) throw InvalidArgument("samples must be finite");
    ts.push_back(p.t_mov);
  }
  std::sort(ts.begin(), ts.end());
  if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) throw InvalidArgument("sample abscissae must be distinct");
}

FitModel fit_quadratic(std::span<const RateSample> samples) {
  const auto s = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd a(s, 3);
  Eigen::VectorXd y(s);
  for (Eigen::Index i = 0; i < s; ++i) {
    const double t = samples[static_cast<std::size_t>(i)].t_mov;
    a.row(i) << t * t, t, 1.0;
    y(i) = samples[static_cast<std::size_t>(i)].rate;
  }
  const Eigen::Vector3d m = a.colPivHouseholderQr().solve(y);
  if (!(m(0) < 0.0)) throw FitDiverged("quadratic fit is not concave");
  FitModel out;
  out.kind = FitKind::Quadratic;
  out.coeffs = {m(0), -m(1) / (2.0 * m(0)), m(2) - m(1) * m(1) / (4.0 * m(0)), 0.0};
  if (!(out.coeffs[1] > 0.0) || !(out.coeffs[2] > 0.0))
    throw FitDiverged("quadratic fit violates C2 > 0, C3 > 0");
  return out;
}

constexpr int kMaxIterations = 200;
constexpr double kInitialDamping = 1e-3;
constexpr double kRelativeTolerance = 1e-10;

FitModel fit_sigmoid(std::span<const RateSample> samples) {
  const auto s = static_cast<Eigen::Index>(samples.size());
  std::array<double, 4> c = sigmoid_initial_guess(samples);

  auto residuals = [&](const std::array<double, 4>& p) {
    Eigen::VectorXd r(s);
    for (Eigen::Index i = 0; i < s; ++i) {
      const auto& q = samples[static_cast<std::size_t>(i)];
      r(i) = sigmoid(p, q.t_mov) - q.rate;
    }
    return r;
  };

  Eigen::VectorXd r = residuals(c);
  double sse = r.squaredNorm();
  double damping = kInitialDamping;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    Eigen::MatrixXd jac(s, 4);
    for (Eigen::Index i = 0; i < s; ++i) {
      const double t = samples[static_cast<std::size_t>(i)].t_mov;
      const double l = logistic(c[2] + c[3] * t);
      const double dl = c[1] * l * (1.0 - l);
      jac.row(i) << 1.0, l, dl, dl * t;
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Eigen::Vector4d jtr = jac.transpose() * r;

    bool improved = false;
    while (damping < 1e16) {
      Eigen::Matrix4d lhs = jtj;
      lhs.diagonal() += damping * jtj.diagonal().cwiseMax(1e-12);
      const Eigen::Vector4d step = lhs.ldlt().solve(-jtr);
      std::array<double, 4> trial{c[0] + step(0), c[1] + step(1), c[2] + step(2), c[3] + step(3)};
      const Eigen::VectorXd tr = residuals(trial);
      const double trial_sse = tr.squaredNorm();
      if (std::isfinite(trial_sse) && trial_sse < sse) {
        const double rel = (sse - trial_sse) / std::max(sse, std::numeric_limits<double>::min());
        c = trial;
        r = tr;
        sse = trial_sse;
        damping /= 10.0;
        improved = true;
        if (rel < kRelativeTolerance) damping = 1e16;  // converged, leave both loops
        break;
      }
      damping *= 10.0;
    }
    if (!improved || damping >= 1e16) {
      ++it;
      break;
    }
  }

  FitModel out;
  out.kind = FitKind::Sigmoidal;
  out.coeffs = c;
  out.iterations = it;
  if (!(c[1] > 0.0) || !(c[3] > 0.0)) throw FitDiverged("sigmoid fit violates C2 > 0, C4 > 0");
  return out;
}

}  // namespace

double FitModel::operator()(double t) const {
  if (kind == FitKind::Quadratic) return coeffs[0] * (t - coeffs[1]) * (t - coeffs[1]) + coeffs[2];
  return sigmoid(coeffs, t);
}

double constant_model_sse(std::span<const RateSample> samples) {
  if (samples.empty()) return 0.0;
  double mean = 0.0;
  for (const auto& p : samples) mean += p.rate;
  mean /= static_cast<double>(samples.size());
  double s = 0.0;
  for (const auto& p : samples) s += (p.rate - mean) * (p.rate - mean);
  return s;
}

std::array<double, 4> sigmoid_initial_guess(std::span<const RateSample> samples) {
  std::vector<RateSample> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.t_mov < b.t_mov; });
  double lo = sorted.front().rate;
  double hi = lo;
  for (const auto& p : sorted) {
    lo = std::min(lo, p.rate);
    hi = std::max(hi, p.rate);
  }
  const double range = std::max(hi - lo, 1e-12);
  double best_slope = -std::numeric_limits<double>::infinity();
  double inflection = sorted.front().t_mov;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const double slope = (sorted[i + 1].rate - sorted[i].rate) / (sorted[i + 1].t_mov - sorted[i].t_mov);
    if (slope > best_slope) {
      best_slope = slope;
      inflection = 0.5 * (sorted[i].t_mov + sorted[i + 1].t_mov);
    }
  }
  const double c2 = 1.1 * range;
  const double span = sorted.back().t_mov - sorted.front().t_mov;
  const double c4 = std::max(4.0 * best_slope / c2, 1e-3 / std::max(span, 1e-12));
  return {lo - 0.05 * range, c2, -c4 * inflection, c4};
}

FitModel fit_rate_model(std::span<const RateSample> samples, FitKind kind) {
  check_samples(samples, kind == FitKind::Quadratic ? 3 : 4);
  FitModel out = kind == FitKind::Quadratic ? fit_quadratic(samples) : fit_sigmoid(samples);
  out.sample_count = static_cast<int>(samples.size());
  out.residual_sse = sse_of(out, samples);
  const double baseline = constant_model_sse(samples);
  if (!(out.residual_sse < baseline))
    throw FitDiverged(std::string(to_string(kind)) + " fit does not improve on a constant model");
  return out;
}

}  // namespace mamove
