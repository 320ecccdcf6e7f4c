#pragma once

#include "mamove/scenario.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace mamove {

/// Tuning for the penalty-based alternating placement optimizer.
///
/// The penalized objective is f(A) / f_ref + rho * sum_n |a_n - z_n|^2 where
/// f_ref = sum_k 1 / (N beta_k) is the smallest value tr(G^-1) can take, so
/// `rho_init` and `pgd_step` are independent of the path-loss scale.
struct PenaltyConfig {
  double rho_init = 1e-3;
  double rho_growth = 10.0;
  double pgd_step = 1e-3;
  /// Accepted steps grow the step size by this factor (1 keeps it constant).
  double step_growth = 2.0;
  double max_step = 10.0;
  /// Largest displacement of any antenna in one PGD step, in wavelengths.
  double max_move = 0.05;
  int pgd_max_iters = 500;
  int ao_max_iters = 12;
  double feasibility_tol = 1e-4;
  double grad_tol = 1e-6;
  double projection_tol = 1e-10;
  int restarts = 8;
  std::uint64_t seed = 0x5eed;

  /// Throws InvalidArgument unless every field is positive and rho_growth > 1.
  void validate() const;
};

struct OptimizeOutcome {
  Deployment deployment;
  double objective = 0.0;  // tr(G^-1) at `deployment`
  int outer_iterations = 0;
  int inner_iterations = 0;
  double max_constraint_violation = 0.0;
  bool converged = false;
  /// max_n |a_n - z_n| after each outer iteration of the winning restart.
  std::vector<double> violation_history;
  int restart_index = 0;
};

/// Euclidean projection onto region ∩ closed-disk(center, radius). Uses
/// Dykstra's alternating projections for the case where both sets are
/// active; the result is exactly inside the box and inside the disk to
/// within `tol`. In Segment1D mode both sets are intervals on the x axis.
Eigen::Vector2d project_box_disk(const Eigen::Vector2d& point, const Eigen::Vector2d& center, double radius,
                                 double region_side, Topology topology, double tol = 1e-10);

struct AnchorResult {
  Deployment anchors;
  int sweeps = 0;
  bool satisfied = false;
};

/// Repairs pairwise spacing by symmetric pushes in index order, clipped to
/// the region, repeated for up to 100 sweeps. Throws InfeasibleSpacing when
/// N points cannot fit at pairwise distance d_min inside the region.
AnchorResult separate_anchors(const Deployment& deployment, double d_min, double region_side, Topology topology);

/// Largest violation of the disk (radius around the initial positions),
/// region and spacing constraints. Zero for a feasible deployment.
double constraint_violation(const Scenario& scenario, const Deployment& deployment, double radius);

/// Disk radius V_max * t_mov, or a radius covering the whole region when
/// t_mov is infinite.
double movement_radius(const Scenario& scenario, double t_mov);

/// One projected-gradient solve of the penalized subproblem with fixed
/// anchors. Starts from `start` (A_initial when absent); every iterate is
/// projected onto its feasible box ∩ disk. Throws SingularChannel when the
/// start point's channel is singular.
Deployment pgd_optimize(const Scenario& scenario, double t_mov, const Deployment& anchors, double rho,
                        const PenaltyConfig& config, const std::optional<Deployment>& start = std::nullopt,
                        int* iterations = nullptr);

/// Minimizes tr(G^-1) subject to the speed, region and spacing constraints
/// for a fixed movement duration. The result is never worse than the
/// initial deployment. `warm_start` must be reachable within t_mov.
OptimizeOutcome optimize_positions(const Scenario& scenario, double t_mov, const PenaltyConfig& config,
                                   const std::optional<Deployment>& warm_start = std::nullopt);

/// Same problem with the speed constraint removed.
OptimizeOutcome unconstrained_deploy(const Scenario& scenario, const PenaltyConfig& config);

/// sum_k 1 / (N beta_k), the lower bound of tr(G^-1) reached by mutually
/// orthogonal user channels.
double trace_lower_bound(const Scenario& scenario);

}  // namespace mamove
