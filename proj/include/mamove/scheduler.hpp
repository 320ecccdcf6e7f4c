#pragma once

#include "mamove/curve_fit.hpp"
#include "mamove/placement.hpp"
#include "mamove/scenario.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mamove {

struct SearchConfig {
  PenaltyConfig penalty;
  /// Threads used for independent optimizer calls (grid points, fit samples).
  int workers = 1;
};

enum class SearchMethod { GeneralSearch, Fitting, Stationary };

std::string_view to_string(SearchMethod method);

/// One evaluated movement duration. `error` is non-empty when the optimizer
/// failed at this duration; such points never win the search.
struct CurvePoint {
  double t_mov = 0.0;
  double rate = 0.0;
  double throughput = 0.0;
  bool converged = false;
  std::string error;
};

struct TradeoffReport {
  double best_t_mov = 0.0;
  Deployment best_deployment;
  double best_rate = 0.0;
  double best_throughput = 0.0;
  bool converged = true;
  std::vector<CurvePoint> curve;
  SearchMethod method = SearchMethod::GeneralSearch;
  std::optional<FitModel> fit;
  double t_mov_max = 0.0;
  /// Number of placement-optimizer runs spent producing the report.
  int optimizer_calls = 0;
};

/// log2(1 + gamma) of the optimized deployment for one duration.
double rate_at_duration(const Scenario& scenario, double t_mov, const PenaltyConfig& config);

/// T / 400, the default duration grid spacing.
double default_grid_step(const Scenario& scenario);

/// The duration grid {0, step, 2 step, ...} restricted to [0, T).
std::vector<double> duration_grid(double interval, double step);

/// Exhaustive search of the effective throughput over the duration grid.
/// Ties go to the smallest duration.
TradeoffReport general_search(const Scenario& scenario, double grid_step, const SearchConfig& config);

struct DurationCap {
  double t_mov_max = 0.0;
  double travel_time = 0.0;  // t_l = max_n |a*_n - a_n^Initial| / V_max
  Deployment a_star;
  double a_star_objective = 0.0;
};

/// Longest useful movement duration: the time needed to reach the
/// speed-unconstrained optimum, capped at T. The optimum is only defined up to
/// a common shift, so `a_star` is the in-region translate with the smallest
/// largest displacement from the start.
DurationCap compute_t_mov_max(const Scenario& scenario, const PenaltyConfig& config);

/// Low-complexity duration choice: sample S rates on [0, t_mov_max], fit
/// both model families, keep the lower-SSE one, maximize (T - t) g(t), then
/// re-optimize at the chosen duration and report the true throughput.
TradeoffReport fitting_method(const Scenario& scenario, int samples, const SearchConfig& config);

}  // namespace mamove
