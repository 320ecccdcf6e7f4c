#include "mamove/channel.hpp"

#include "mamove/errors.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

namespace mamove {

namespace {

using cd = std::complex<double>;

void check_shape(const Scenario& scenario, const Deployment& deployment) {
  if (deployment.size() != scenario.num_antennas())
    throw InvalidArgument("deployment has " + std::to_string(deployment.size()) + " antennas, scenario expects " +
                          std::to_string(scenario.num_antennas()));
  if (!deployment.all_finite()) throw InvalidArgument("deployment has non-finite coordinates");
}

}  // namespace

Eigen::RowVectorXcd channel_vector(const Scenario& scenario, const Deployment& deployment, std::size_t k) {
  check_shape(scenario, deployment);
  if (k >= scenario.num_users()) throw InvalidArgument("user index out of range");
  const Eigen::Vector2d b = scenario.direction(k);
  const double amp = std::sqrt(scenario.fading(k));
  const double k0 = scenario.wavenumber();
  const auto n = static_cast<Eigen::Index>(deployment.size());
  Eigen::RowVectorXcd h(n);
  for (Eigen::Index i = 0; i < n; ++i) h(i) = std::polar(amp, k0 * deployment.matrix().col(i).dot(b));
  return h;
}

Eigen::MatrixXcd channel_matrix(const Scenario& scenario, const Deployment& deployment) {
  check_shape(scenario, deployment);
  const auto n = static_cast<Eigen::Index>(scenario.num_antennas());
  const auto k = static_cast<Eigen::Index>(scenario.num_users());
  const double k0 = scenario.wavenumber();
  Eigen::MatrixXcd h(n, k);
  for (Eigen::Index u = 0; u < k; ++u) {
    const Eigen::Vector2d b = scenario.direction(static_cast<std::size_t>(u));
    const double amp = std::sqrt(scenario.fading(static_cast<std::size_t>(u)));
    for (Eigen::Index i = 0; i < n; ++i) h(i, u) = std::polar(amp, -k0 * deployment.matrix().col(i).dot(b));
  }
  return h;
}

Eigen::MatrixXcd hermitian_inverse(const Eigen::MatrixXcd& m, double max_condition, double* condition) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  if (eig.info() != Eigen::Success) throw SingularChannel("eigendecomposition failed");
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const double lo = lam.minCoeff();
  const double hi = lam.maxCoeff();
  const double cond = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (condition) *condition = cond;
  if (!(cond <= max_condition)) {
    std::ostringstream os;
    os << "Gram condition number " << cond << " exceeds " << max_condition;
    throw SingularChannel(os.str());
  }
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  Eigen::MatrixXcd inv = v * lam.cwiseInverse().asDiagonal() * v.adjoint();
  return (inv + inv.adjoint()) * 0.5;
}

ChannelState channel_state(const Scenario& scenario, const Deployment& deployment) {
  ChannelState st;
  st.H = channel_matrix(scenario, deployment);
  st.G = st.H.adjoint() * st.H;
  st.G = (st.G + st.G.adjoint()) * 0.5;

  // G^-1 = R^-1 R^-H from H = QR keeps the error at cond(H) rather than cond(G).
  const auto k = st.H.cols();
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(st.H);
  const Eigen::MatrixXcd r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(r).singularValues();
  const double smin = sv.minCoeff();
  st.condition = smin > 0.0 ? (sv.maxCoeff() / smin) * (sv.maxCoeff() / smin) : std::numeric_limits<double>::infinity();
  if (!(st.condition <= kMaxGramCondition)) {
    std::ostringstream os;
    os << "Gram condition number " << st.condition << " exceeds " << kMaxGramCondition;
    throw SingularChannel(os.str());
  }
  const Eigen::MatrixXcd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXcd::Identity(k, k));
  st.G_inv = r_inv * r_inv.adjoint();
  st.G_inv = (st.G_inv + st.G_inv.adjoint()) * 0.5;
  return st;
}

double trace_objective(const Scenario& scenario, const Deployment& deployment) {
  return channel_state(scenario, deployment).G_inv.trace().real();
}

Eigen::VectorXcd zf_beamformer(const Scenario& scenario, const Deployment& deployment, std::size_t k) {
  if (k >= scenario.num_users()) throw InvalidArgument("user index out of range");
  const Eigen::MatrixXcd h = channel_state(scenario, deployment).H;
  const auto n = h.rows();
  const auto users = h.cols();
  Eigen::VectorXcd w = h.col(static_cast<Eigen::Index>(k));
  if (users > 1) {
    Eigen::MatrixXcd b(n, users - 1);
    for (Eigen::Index u = 0, c = 0; u < users; ++u)
      if (u != static_cast<Eigen::Index>(k)) b.col(c++) = h.col(u);
    const Eigen::MatrixXcd q =
        Eigen::HouseholderQR<Eigen::MatrixXcd>(b).householderQ() * Eigen::MatrixXcd::Identity(n, users - 1);
    // Second pass removes what rounding left in the span of the others.
    for (int pass = 0; pass < 2; ++pass) w -= q * (q.adjoint() * w);
  }
  const double norm = w.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw SingularChannel("user channel lies in the span of the others");
  return w / norm;
}

Eigen::MatrixXcd zf_beamformers(const Scenario& scenario, const Deployment& deployment) {
  const auto k = static_cast<Eigen::Index>(scenario.num_users());
  Eigen::MatrixXcd w(static_cast<Eigen::Index>(scenario.num_antennas()), k);
  for (Eigen::Index u = 0; u < k; ++u) w.col(u) = zf_beamformer(scenario, deployment, static_cast<std::size_t>(u));
  return w;
}

Eigen::VectorXd optimal_power(const Scenario& scenario, const Deployment& deployment) {
  const ChannelState st = channel_state(scenario, deployment);
  const Eigen::VectorXd diag = st.G_inv.diagonal().real();
  return diag / diag.sum() * scenario.total_power();
}

Eigen::VectorXd user_sinrs(const Scenario& scenario, const Deployment& deployment, const Eigen::VectorXd& powers,
                           const Eigen::MatrixXcd& beams) {
  const auto k = static_cast<Eigen::Index>(scenario.num_users());
  if (powers.size() != k || beams.cols() != k || beams.rows() != static_cast<Eigen::Index>(scenario.num_antennas()))
    throw InvalidArgument("power/beam dimensions do not match the scenario");
  const Eigen::MatrixXcd h = channel_matrix(scenario, deployment);
  // gains(u, j) = |h_u w_j|^2 with h_u the row vector (column u of H, conjugated).
  const Eigen::MatrixXd gains = (h.adjoint() * beams).cwiseAbs2();
  Eigen::VectorXd sinr(k);
  for (Eigen::Index u = 0; u < k; ++u) {
    double interference = 0.0;
    for (Eigen::Index j = 0; j < k; ++j)
      if (j != u) interference += powers(j) * gains(u, j);
    sinr(u) = powers(u) * gains(u, u) / (interference + scenario.noise_power());
  }
  return sinr;
}

double common_sinr(const Scenario& scenario, const Deployment& deployment) {
  return scenario.snr_scale() / trace_objective(scenario, deployment);
}

double achievable_rate(const Scenario& scenario, const Deployment& deployment) {
  return std::log2(1.0 + common_sinr(scenario, deployment));
}

double effective_throughput(const Scenario& scenario, const Deployment& deployment, double t_mov) {
  const double t = scenario.interval();
  if (!(t_mov >= 0.0 && t_mov <= t)) throw InvalidArgument("movement duration must lie in [0, T]");
  if (t_mov == t) return 0.0;
  return (t - t_mov) * achievable_rate(scenario, deployment);
}

}  // namespace mamove
