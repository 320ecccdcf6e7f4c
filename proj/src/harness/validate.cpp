#include "mamove/harness/validate.hpp"

#include "mamove/channel.hpp"
#include "mamove/errors.hpp"
#include "mamove/gradients.hpp"
#include "mamove/placement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace mamove::harness {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

CheckResult check(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, "max error " + num(value) + " (limit " + num(limit) + ")"};
}

}  // namespace

std::vector<CheckResult> validate_scenario(const Scenario& scenario, const RunConfig& config) {
  std::vector<CheckResult> out;
  const Deployment& a = scenario.initial();
  const std::size_t k_users = scenario.num_users();

  try {
    const Eigen::MatrixXcd beams = zf_beamformers(scenario, a);
    double leak = 0.0;
    for (std::size_t k = 0; k < k_users; ++k) {
      for (std::size_t j = 0; j < k_users; ++j) {
        if (j == k) continue;
        const double g = std::abs((channel_vector(scenario, a, j) * beams.col(static_cast<Eigen::Index>(k)))(0));
        leak = std::max(leak, g / std::sqrt(scenario.fading(j)));
      }
    }
    out.push_back(check("zf_nulls", leak, 1e-9));

    const Eigen::VectorXd p = optimal_power(scenario, a);
    out.push_back(check("power_sum", std::abs(p.sum() / scenario.total_power() - 1.0), 1e-9));

    const Eigen::VectorXd sinr = user_sinrs(scenario, a, p, beams);
    const double gamma = common_sinr(scenario, a);
    double spread = 0.0;
    for (Eigen::Index k = 0; k < sinr.size(); ++k) spread = std::max(spread, std::abs(sinr(k) / gamma - 1.0));
    out.push_back(check("equal_sinr", spread, 1e-9));

    const Deployment shifted = a.translated(Eigen::Vector2d(0.37, scenario.topology() == Topology::Square2D ? -0.21 : 0.0));
    const double f0 = trace_objective(scenario, a);
    out.push_back(check("translation_invariance", std::abs(trace_objective(scenario, shifted) / f0 - 1.0), 1e-9));

    const GradientField analytic = grad_trace(scenario, a);
    const GradientField numeric = fd_gradient(scenario, a);
    const double scale = std::max(analytic.max_abs(), 1e-6 * f0);
    out.push_back(check("gradient_fd", (analytic.components - numeric.components).cwiseAbs().maxCoeff() / scale, 1e-5));

    for (double frac : {0.05, 0.2, 0.5}) {
      const double t = frac * scenario.interval();
      const OptimizeOutcome o = optimize_positions(scenario, t, config.search.penalty);
      const double viol = constraint_violation(scenario, o.deployment, movement_radius(scenario, t));
      out.push_back(check("feasible_at_" + num(t) + "s", viol, config.search.penalty.feasibility_tol));
      out.push_back({"no_worse_than_start_at_" + num(t) + "s", o.objective <= f0 * (1.0 + 1e-12),
                     "tr(G^-1) " + num(o.objective) + " vs start " + num(f0)});
    }
  } catch (const Error& e) {
    out.push_back({"evaluation", false, e.what()});
  }
  return out;
}

}  // namespace mamove::harness
