#pragma once

#include "mamove/scenario.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace mamove {

/// Largest Gram condition number accepted before an inversion is refused.
inline constexpr double kMaxGramCondition = 1e12;

/// Stacked LoS channel for one deployment.
///   H      N x K, column k is h_k^H, so [H]_{n,k} = sqrt(beta_k) exp(-j k0 a_n . b_k)
///   G      K x K Gram matrix H^H H
///   G_inv  inverse of G
struct ChannelState {
  Eigen::MatrixXcd H;
  Eigen::MatrixXcd G;
  Eigen::MatrixXcd G_inv;
  double condition = 1.0;
};

/// Row vector h_k with entries sqrt(beta_k) exp(+j (2 pi / lambda) a_n . b_k).
Eigen::RowVectorXcd channel_vector(const Scenario& scenario, const Deployment& deployment, std::size_t k);

/// N x K matrix H (no inversion, never throws for valid inputs).
Eigen::MatrixXcd channel_matrix(const Scenario& scenario, const Deployment& deployment);

/// Throws SingularChannel when cond(G) exceeds kMaxGramCondition.
ChannelState channel_state(const Scenario& scenario, const Deployment& deployment);

/// Inverse of a Hermitian positive-definite matrix via its eigendecomposition.
/// Throws SingularChannel when the condition number exceeds `max_condition`.
Eigen::MatrixXcd hermitian_inverse(const Eigen::MatrixXcd& m, double max_condition = kMaxGramCondition,
                                   double* condition = nullptr);

/// tr(G^-1), the quantity the placement optimizer minimizes.
double trace_objective(const Scenario& scenario, const Deployment& deployment);

/// Unit-norm ZF beam for user k: (I - B_k (B_k^H B_k)^-1 B_k^H) h_k^H, normalized.
/// With a single user the projector is empty and the beam is the matched filter.
Eigen::VectorXcd zf_beamformer(const Scenario& scenario, const Deployment& deployment, std::size_t k);

/// All K beams as columns of an N x K matrix.
Eigen::MatrixXcd zf_beamformers(const Scenario& scenario, const Deployment& deployment);

/// Equal-SINR powers P_k = [G^-1]_{kk} / tr(G^-1) * P_tot.
Eigen::VectorXd optimal_power(const Scenario& scenario, const Deployment& deployment);

/// Per-user SINR for arbitrary powers and beams (columns of `beams`), with
/// interference from every other stream.
Eigen::VectorXd user_sinrs(const Scenario& scenario, const Deployment& deployment, const Eigen::VectorXd& powers,
                           const Eigen::MatrixXcd& beams);

/// Common post-ZF SINR P_tot / (tr(G^-1) sigma^2).
double common_sinr(const Scenario& scenario, const Deployment& deployment);

/// log2(1 + common_sinr).
double achievable_rate(const Scenario& scenario, const Deployment& deployment);

/// (T - t_mov) * log2(1 + common_sinr), bits/Hz. Requires 0 <= t_mov <= T.
double effective_throughput(const Scenario& scenario, const Deployment& deployment, double t_mov);

}  // namespace mamove
