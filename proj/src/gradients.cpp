#include "mamove/gradients.hpp"

#include "mamove/errors.hpp"

#include <cmath>
#include <numbers>

namespace mamove {

double GradientField::norm_sum() const { return components.colwise().norm().sum(); }

GradientField grad_trace(const Scenario& scenario, const Deployment& deployment, const ChannelState& state) {
  const auto n = state.H.rows();
  const auto k = state.H.cols();
  const Eigen::MatrixXcd m = state.G_inv * (state.G_inv * state.H.adjoint());  // K x N
  const double scale = -4.0 * std::numbers::pi / scenario.wavelength();

  Eigen::Matrix2Xd g = Eigen::Matrix2Xd::Zero(2, n);
  for (Eigen::Index u = 0; u < k; ++u) {
    const Eigen::Vector2d b = scenario.direction(static_cast<std::size_t>(u));
    for (Eigen::Index i = 0; i < n; ++i) g.col(i) += b * (m(u, i) * state.H(i, u)).imag();
  }
  g *= scale;
  if (scenario.topology() == Topology::Segment1D) g.row(1).setZero();
  return {std::move(g), deployment};
}

GradientField grad_trace(const Scenario& scenario, const Deployment& deployment) {
  return grad_trace(scenario, deployment, channel_state(scenario, deployment));
}

GradientField grad_rate(const Scenario& scenario, const Deployment& deployment) {
  const ChannelState st = channel_state(scenario, deployment);
  const double f = st.G_inv.trace().real();
  const double c = scenario.snr_scale();
  GradientField g = grad_trace(scenario, deployment, st);
  g.components *= -c / (std::numbers::ln2 * f * (f + c));
  return g;
}

GradientField fd_gradient(const DeploymentObjective& objective, const Deployment& deployment, double step,
                          Topology topology) {
  if (!(step > 0.0)) throw InvalidArgument("finite-difference step must be positive");
  const auto n = static_cast<Eigen::Index>(deployment.size());
  const Eigen::Index dims = topology == Topology::Segment1D ? 1 : 2;
  Eigen::Matrix2Xd g = Eigen::Matrix2Xd::Zero(2, n);
  Deployment probe = deployment;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index d = 0; d < dims; ++d) {
      const double x0 = deployment.matrix()(d, i);
      probe.matrix()(d, i) = x0 + step;
      const double fp = objective(probe);
      probe.matrix()(d, i) = x0 - step;
      const double fm = objective(probe);
      probe.matrix()(d, i) = x0;
      g(d, i) = (fp - fm) / (2.0 * step);
    }
  }
  return {std::move(g), deployment};
}

GradientField fd_gradient(const Scenario& scenario, const Deployment& deployment, double step) {
  return fd_gradient([&](const Deployment& d) { return trace_objective(scenario, d); }, deployment, step,
                     scenario.topology());
}

}  // namespace mamove
