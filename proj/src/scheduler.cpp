#include "mamove/scheduler.hpp"

#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mamove {

std::string_view to_string(SearchMethod method) {
  switch (method) {
    case SearchMethod::GeneralSearch: return "general";
    case SearchMethod::Fitting: return "fitting";
    case SearchMethod::Stationary: return "stationary";
  }
  return "unknown";
}

double rate_at_duration(const Scenario& scenario, double t_mov, const PenaltyConfig& config) {
  return achievable_rate(scenario, optimize_positions(scenario, t_mov, config).deployment);
}

double default_grid_step(const Scenario& scenario) { return scenario.interval() / 400.0; }

std::vector<double> duration_grid(double interval, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("grid step must be positive");
  std::vector<double> grid;
  // Points within a relative 1e-9 of T count as T and are excluded.
  for (std::size_t i = 0;; ++i) {
    const double t = static_cast<double>(i) * step;
    if (t >= interval * (1.0 - 1e-9)) break;
    grid.push_back(t);
  }
  return grid;
}

namespace {

struct Evaluated {
  CurvePoint point;
  Deployment deployment;
};

Evaluated evaluate_duration(const Scenario& scenario, double t, const PenaltyConfig& penalty) {
  Evaluated e;
  e.point.t_mov = t;
  try {
    OptimizeOutcome out = optimize_positions(scenario, t, penalty);
    e.point.rate = achievable_rate(scenario, out.deployment);
    e.point.throughput = effective_throughput(scenario, out.deployment, t);
    e.point.converged = out.converged;
    e.deployment = std::move(out.deployment);
  } catch (const Error& err) {
    e.point.error = err.what();
  }
  return e;
}

std::vector<Evaluated> evaluate_all(const Scenario& scenario, const std::vector<double>& ts,
                                    const SearchConfig& config) {
  std::vector<Evaluated> out(ts.size());
  parallel_for(ts.size(), config.workers,
               [&](std::size_t i) { out[i] = evaluate_duration(scenario, ts[i], config.penalty); });
  return out;
}

/// Index of the best successful sample; ties keep the earliest (smallest t).
std::optional<std::size_t> argmax(const std::vector<Evaluated>& evals) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (!evals[i].point.error.empty()) continue;
    if (!best || evals[i].point.throughput > evals[*best].point.throughput) best = i;
  }
  return best;
}

void fill_best(TradeoffReport& report, const Scenario& scenario, double t, Deployment deployment, bool converged) {
  report.best_t_mov = t;
  report.best_rate = achievable_rate(scenario, deployment);
  report.best_throughput = effective_throughput(scenario, deployment, t);
  report.best_deployment = std::move(deployment);
  report.converged = converged;
}

}  // namespace

TradeoffReport general_search(const Scenario& scenario, double grid_step, const SearchConfig& config) {
  const std::vector<double> grid = duration_grid(scenario.interval(), grid_step);
  std::vector<Evaluated> evals = evaluate_all(scenario, grid, config);

  TradeoffReport report;
  report.method = SearchMethod::GeneralSearch;
  report.t_mov_max = scenario.interval();
  report.optimizer_calls = static_cast<int>(grid.size());
  for (const auto& e : evals) report.curve.push_back(e.point);

  const auto best = argmax(evals);
  if (!best) throw SingularChannel("every duration on the grid failed to optimize");
  fill_best(report, scenario, evals[*best].point.t_mov, evals[*best].deployment, evals[*best].point.converged);
  return report;
}

namespace {

struct Circle {
  Eigen::Vector2d centre;
  double radius = 0.0;
};

bool encloses(const Circle& c, const Eigen::Matrix2Xd& pts) {
  for (Eigen::Index i = 0; i < pts.cols(); ++i)
    if ((pts.col(i) - c.centre).norm() > c.radius * (1.0 + 1e-12) + 1e-12) return false;
  return true;
}

// Smallest circle enclosing the columns, by enumerating the circles fixed
// by two or three of them. Fine for the handful of antennas involved.
Circle min_enclosing_circle(const Eigen::Matrix2Xd& pts) {
  const Eigen::Index n = pts.cols();
  Circle best{pts.col(0), std::numeric_limits<double>::infinity()};
  if (n == 1) return {pts.col(0), 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Circle c{0.5 * (pts.col(i) + pts.col(j)), 0.5 * (pts.col(i) - pts.col(j)).norm()};
      if (c.radius < best.radius && encloses(c, pts)) best = c;
      for (Eigen::Index k = j + 1; k < n; ++k) {
        const Eigen::Vector2d b = pts.col(j) - pts.col(i);
        const Eigen::Vector2d d = pts.col(k) - pts.col(i);
        const double den = 2.0 * (b.x() * d.y() - b.y() * d.x());
        if (std::abs(den) < 1e-14) continue;
        const Eigen::Vector2d u((d.y() * b.squaredNorm() - b.y() * d.squaredNorm()) / den,
                                (b.x() * d.squaredNorm() - d.x() * b.squaredNorm()) / den);
        const Circle cc{pts.col(i) + u, u.norm()};
        if (cc.radius < best.radius && encloses(cc, pts)) best = cc;
      }
    }
  }
  return best;
}

double max_travel(const Deployment& to, const Deployment& from) {
  return (to.matrix() - from.matrix()).colwise().norm().maxCoeff();
}

// tr(G^-1) ignores a common shift, so among the translates of `a_star` that
// stay in the region pick the one closest to the start in the max sense.
Deployment nearest_translate(const Scenario& scenario, const Deployment& a_star) {
  const Eigen::Matrix2Xd offsets = a_star.matrix() - scenario.initial().matrix();
  Eigen::Vector2d shift = -min_enclosing_circle(offsets).centre;
  const double side = scenario.region_side();
  for (int axis = 0; axis < 2; ++axis) {
    const double lo = -a_star.matrix().row(axis).minCoeff();
    const double hi = side - a_star.matrix().row(axis).maxCoeff();
    shift(axis) = std::clamp(shift(axis), std::min(lo, 0.0), std::max(hi, 0.0));
  }
  if (scenario.topology() == Topology::Segment1D) shift.y() = 0.0;
  const Deployment moved = a_star.translated(shift);
  return max_travel(moved, scenario.initial()) < max_travel(a_star, scenario.initial()) ? moved : a_star;
}

}  // namespace

DurationCap compute_t_mov_max(const Scenario& scenario, const PenaltyConfig& config) {
  if (!(scenario.max_speed() > 0.0)) throw InvalidArgument("t_mov_max needs a positive maximum speed");
  const OptimizeOutcome out = unconstrained_deploy(scenario, config);
  DurationCap cap;
  cap.a_star = nearest_translate(scenario, out.deployment);
  cap.a_star_objective = trace_objective(scenario, cap.a_star);
  cap.travel_time = max_travel(cap.a_star, scenario.initial()) / scenario.max_speed();
  cap.t_mov_max = cap.travel_time >= scenario.interval() ? scenario.interval() : cap.travel_time;
  return cap;
}

TradeoffReport fitting_method(const Scenario& scenario, int samples, const SearchConfig& config) {
  if (samples < 4) throw InvalidArgument("fitting method needs at least 4 samples");
  if (!(scenario.max_speed() > 0.0)) throw InvalidArgument("fitting method needs a positive maximum speed");

  const DurationCap cap = compute_t_mov_max(scenario, config.penalty);
  TradeoffReport report;
  report.t_mov_max = cap.t_mov_max;
  report.optimizer_calls = 1;

  // Nothing to gain from moving: the unconstrained optimum is the start.
  if (cap.t_mov_max <= 1e-9 * scenario.interval()) {
    report.method = SearchMethod::Stationary;
    report.t_mov_max = 0.0;
    fill_best(report, scenario, 0.0, scenario.initial(), true);
    report.curve.push_back({0.0, report.best_rate, report.best_throughput, true, {}});
    return report;
  }

  std::vector<double> ts(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) ts[static_cast<std::size_t>(i)] = cap.t_mov_max * i / (samples - 1);
  std::vector<Evaluated> evals = evaluate_all(scenario, ts, config);
  report.optimizer_calls += samples;

  std::vector<RateSample> data;
  for (const auto& e : evals) {
    report.curve.push_back(e.point);
    if (e.point.error.empty()) data.push_back({e.point.t_mov, e.point.rate});
  }

  std::optional<FitModel> chosen;
  for (FitKind kind : {FitKind::Quadratic, FitKind::Sigmoidal}) {
    try {
      FitModel m = fit_rate_model(data, kind);
      if (!chosen || m.residual_sse < chosen->residual_sse) chosen = m;
    } catch (const Error&) {
      // InvalidArgument here means too few surviving samples; same fallback.
    }
  }

  if (!chosen) {
    const auto best = argmax(evals);
    if (!best) throw SingularChannel("every fitting sample failed to optimize");
    report.method = SearchMethod::GeneralSearch;
    fill_best(report, scenario, evals[*best].point.t_mov, evals[*best].deployment, evals[*best].point.converged);
    return report;
  }

  constexpr int kFineSteps = 10000;
  const double t_total = scenario.interval();
  double best_t = 0.0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= kFineSteps; ++j) {
    const double t = cap.t_mov_max * j / kFineSteps;
    const double v = (t_total - t) * (*chosen)(t);
    if (v > best_val) {
      best_val = v;
      best_t = t;
    }
  }

  report.method = SearchMethod::Fitting;
  report.fit = chosen;
  Evaluated final_eval = evaluate_duration(scenario, best_t, config.penalty);
  report.optimizer_calls += 1;
  if (!final_eval.point.error.empty()) throw SingularChannel(final_eval.point.error);
  fill_best(report, scenario, best_t, std::move(final_eval.deployment), final_eval.point.converged);
  return report;
}

}  // namespace mamove
