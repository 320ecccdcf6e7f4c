#pragma once

#include "mamove/channel.hpp"
#include "mamove/scenario.hpp"

#include <Eigen/Dense>

#include <functional>

namespace mamove {

/// Per-antenna gradient, column n holds (d/dx_n, d/dy_n), evaluated at `at`.
struct GradientField {
  Eigen::Matrix2Xd components;
  Deployment at;

  /// Sum over antennas of the Euclidean norm of each 2-vector.
  double norm_sum() const;
  double max_abs() const { return components.size() ? components.cwiseAbs().maxCoeff() : 0.0; }
};

/// Closed-form gradient of tr(G^-1):
///   grad_n = -(4 pi / lambda) sum_k b_k Im([G^-2 H^H]_{k,n} [H]_{n,k}).
GradientField grad_trace(const Scenario& scenario, const Deployment& deployment);

/// Same, reusing an already computed channel state for `deployment`.
GradientField grad_trace(const Scenario& scenario, const Deployment& deployment, const ChannelState& state);

/// Gradient of R = log2(1 + c / f) with c = P_tot / sigma^2 and f = tr(G^-1).
GradientField grad_rate(const Scenario& scenario, const Deployment& deployment);

using DeploymentObjective = std::function<double(const Deployment&)>;

/// Central differences of an arbitrary objective. y-components are left at
/// zero for Segment1D.
GradientField fd_gradient(const DeploymentObjective& objective, const Deployment& deployment, double step,
                          Topology topology);

/// Central differences of tr(G^-1) with the default step of 1e-6 wavelengths.
GradientField fd_gradient(const Scenario& scenario, const Deployment& deployment, double step = 1e-6);

}  // namespace mamove
