#include "mamove/placement.hpp"

#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace mamove {

void PenaltyConfig::validate() const {
  const bool ok = rho_init > 0.0 && rho_growth > 1.0 && pgd_step > 0.0 && step_growth >= 1.0 && max_step > 0.0 && max_move > 0.0 &&
                  pgd_max_iters > 0 && ao_max_iters > 0 && feasibility_tol > 0.0 && grad_tol > 0.0 &&
                  projection_tol > 0.0 && restarts > 0;
  if (!ok) throw InvalidArgument("penalty configuration values must be positive with rho_growth > 1");
}

double trace_lower_bound(const Scenario& scenario) {
  double s = 0.0;
  for (std::size_t k = 0; k < scenario.num_users(); ++k) s += 1.0 / scenario.fading(k);
  return s / static_cast<double>(scenario.num_antennas());
}

double movement_radius(const Scenario& scenario, double t_mov) {
  if (std::isinf(t_mov)) {
    const double side = scenario.region_side();
    return scenario.topology() == Topology::Segment1D ? side : side * std::numbers::sqrt2;
  }
  return scenario.max_speed() * t_mov;
}

double constraint_violation(const Scenario& scenario, const Deployment& deployment, double radius) {
  const double side = scenario.region_side();
  double worst = 0.0;
  for (std::size_t n = 0; n < deployment.size(); ++n) {
    const Eigen::Vector2d p = deployment[n];
    worst = std::max(worst, (p - scenario.initial()[n]).norm() - radius);
    worst = std::max({worst, -p.x(), p.x() - side});
    if (scenario.topology() == Topology::Segment1D)
      worst = std::max(worst, std::abs(p.y()));
    else
      worst = std::max({worst, -p.y(), p.y() - side});
  }
  if (deployment.size() > 1) worst = std::max(worst, scenario.min_spacing() - deployment.min_pairwise_distance());
  return std::max(worst, 0.0);
}

namespace {

struct Penalized {
  const Scenario& scenario;
  const Deployment& anchors;
  double rho;
  double f_ref;

  double value(const ChannelState& st, const Deployment& a) const {
    return st.G_inv.trace().real() / f_ref + rho * (a.matrix() - anchors.matrix()).squaredNorm();
  }
};

Deployment project_all(const Scenario& scenario, const Deployment& a, double radius, double tol) {
  Deployment out = a;
  for (std::size_t n = 0; n < a.size(); ++n)
    out.set(n, project_box_disk(a[n], scenario.initial()[n], radius, scenario.region_side(), scenario.topology(),
                                tol));
  return out;
}

Deployment run_pgd(const Scenario& scenario, double radius, const Deployment& anchors, double rho,
                   const PenaltyConfig& cfg, Deployment a, int* iterations) {
  const Penalized problem{scenario, anchors, rho, trace_lower_bound(scenario)};
  a = project_all(scenario, a, radius, cfg.projection_tol);
  ChannelState st = channel_state(scenario, a);
  double phi = problem.value(st, a);
  double eta = cfg.pgd_step;
  int it = 0;
  for (; it < cfg.pgd_max_iters; ++it) {
    Eigen::Matrix2Xd grad = grad_trace(scenario, a, st).components / problem.f_ref;
    grad += 2.0 * rho * (a.matrix() - anchors.matrix());

    bool accepted = false;
    bool stationary = false;
    Deployment trial;
    ChannelState trial_state;
    double trial_phi = 0.0;
    while (true) {
      Eigen::Matrix2Xd step = eta * grad;
      const double longest = step.colwise().norm().maxCoeff();
      if (longest > cfg.max_move) step *= cfg.max_move / longest;
      Deployment stepped(a.matrix() - step);
      trial = project_all(scenario, stepped, radius, cfg.projection_tol);
      if ((trial.matrix() - a.matrix()).norm() < cfg.grad_tol) {
        stationary = true;
        break;
      }
      try {
        trial_state = channel_state(scenario, trial);
        trial_phi = problem.value(trial_state, trial);
      } catch (const SingularChannel&) {
        trial_phi = std::numeric_limits<double>::infinity();
      }
      if (trial_phi <= phi) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (stationary || !accepted) break;
    a = std::move(trial);
    st = std::move(trial_state);
    phi = trial_phi;
    eta = std::min(eta * cfg.step_growth, cfg.max_step);
  }
  if (iterations) *iterations += it;
  return a;
}

Deployment jittered_start(const Scenario& scenario, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double side = scenario.region_side();
  Deployment out = scenario.initial();
  for (std::size_t n = 0; n < out.size(); ++n) {
    const Eigen::Vector2d c = scenario.initial()[n];
    const double x_lo = std::max(0.0, c.x() - radius);
    const double x_hi = std::min(side, c.x() + radius);
    if (scenario.topology() == Topology::Segment1D) {
      out.set(n, {x_lo + (x_hi - x_lo) * unit(rng), 0.0});
      continue;
    }
    const double y_lo = std::max(0.0, c.y() - radius);
    const double y_hi = std::min(side, c.y() + radius);
    Eigen::Vector2d p = c;
    for (int tries = 0; tries < 1000; ++tries) {
      const Eigen::Vector2d q(x_lo + (x_hi - x_lo) * unit(rng), y_lo + (y_hi - y_lo) * unit(rng));
      if ((q - c).norm() <= radius) {
        p = q;
        break;
      }
    }
    out.set(n, p);
  }
  return out;
}

double max_anchor_gap(const Deployment& a, const Deployment& z) {
  return (a.matrix() - z.matrix()).colwise().norm().maxCoeff();
}

struct Candidate {
  Deployment deployment;
  double objective = std::numeric_limits<double>::infinity();
};

OptimizeOutcome solve_once(const Scenario& scenario, double radius, const PenaltyConfig& cfg, const Deployment& start) {
  OptimizeOutcome out;
  Candidate best{scenario.initial(), trace_objective(scenario, scenario.initial())};
  auto consider = [&](const Deployment& d) {
    if (constraint_violation(scenario, d, radius) > cfg.feasibility_tol) return;
    double f = 0.0;
    try {
      f = trace_objective(scenario, d);
    } catch (const SingularChannel&) {
      return;
    }
    if (f < best.objective) best = {d, f};
  };
  consider(start);

  Deployment a = project_all(scenario, start, radius, cfg.projection_tol);
  Deployment z = separate_anchors(a, scenario.min_spacing(), scenario.region_side(), scenario.topology()).anchors;
  double rho = cfg.rho_init;
  for (int outer = 0; outer < cfg.ao_max_iters; ++outer) {
    try {
      a = run_pgd(scenario, radius, z, rho, cfg, a, &out.inner_iterations);
    } catch (const SingularChannel&) {
      break;
    }
    out.outer_iterations = outer + 1;
    z = separate_anchors(a, scenario.min_spacing(), scenario.region_side(), scenario.topology()).anchors;
    const double gap = max_anchor_gap(a, z);
    out.violation_history.push_back(gap);
    consider(a);
    if (gap <= cfg.feasibility_tol) {
      out.converged = true;
      break;
    }
    rho *= cfg.rho_growth;
  }
  consider(project_all(scenario, z, radius, cfg.projection_tol));

  out.deployment = std::move(best.deployment);
  out.objective = best.objective;
  out.max_constraint_violation = constraint_violation(scenario, out.deployment, radius);
  return out;
}

OptimizeOutcome solve(const Scenario& scenario, double radius, const PenaltyConfig& cfg,
                      const std::optional<Deployment>& warm_start) {
  cfg.validate();
  if (warm_start && warm_start->size() != scenario.num_antennas())
    throw InvalidArgument("warm start has the wrong number of antennas");

  OptimizeOutcome best;
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    const Deployment start = r == 0 ? warm_start.value_or(scenario.initial())
                                    : jittered_start(scenario, radius, cfg.seed + static_cast<std::uint64_t>(r));
    OptimizeOutcome out = solve_once(scenario, radius, cfg, start);
    out.restart_index = r;
    // Later restarts must win by a clear margin so ties go to the first.
    if (!have || out.objective < best.objective * (1.0 - 1e-9)) {
      best = std::move(out);
      have = true;
    }
  }
  return best;
}

}  // namespace

Deployment pgd_optimize(const Scenario& scenario, double t_mov, const Deployment& anchors, double rho,
                        const PenaltyConfig& config, const std::optional<Deployment>& start, int* iterations) {
  if (!(t_mov >= 0.0)) throw InvalidArgument("movement duration must be non-negative");
  if (!(rho >= 0.0)) throw InvalidArgument("penalty factor must be non-negative");
  if (anchors.size() != scenario.num_antennas()) throw InvalidArgument("anchor count does not match N");
  return run_pgd(scenario, movement_radius(scenario, t_mov), anchors, rho, config,
                 start.value_or(scenario.initial()), iterations);
}

OptimizeOutcome optimize_positions(const Scenario& scenario, double t_mov, const PenaltyConfig& config,
                                   const std::optional<Deployment>& warm_start) {
  if (!(t_mov >= 0.0 && t_mov <= scenario.interval()))
    throw InvalidArgument("movement duration must lie in [0, T]");
  const double radius = movement_radius(scenario, t_mov);
  if (radius == 0.0) {
    config.validate();
    OptimizeOutcome out;
    out.deployment = scenario.initial();
    out.objective = trace_objective(scenario, out.deployment);
    out.converged = true;
    return out;
  }
  return solve(scenario, radius, config, warm_start);
}

OptimizeOutcome unconstrained_deploy(const Scenario& scenario, const PenaltyConfig& config) {
  return solve(scenario, movement_radius(scenario, std::numeric_limits<double>::infinity()), config, std::nullopt);
}

}  // namespace mamove
