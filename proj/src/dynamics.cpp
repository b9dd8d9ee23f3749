#include "mirrorqed/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mirrorqed {

namespace {

constexpr double kEigClamp = -1e-10;

const Eigen::Matrix4cd& spin_flip() {
  // sigma_y (x) sigma_y
  static const Eigen::Matrix4cd f = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return f;
}

}  // namespace

Amplitudes evolve(const InitialState& psi0, const RateSet& rates, double t) {
  if (!(std::isfinite(t) && t >= 0.0))
    throw std::invalid_argument("evolve: t must be >= 0 and finite");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::complex<double> bp0 = (psi0.c_eg + psi0.c_ge) * inv_sqrt2;
  const std::complex<double> bm0 = (psi0.c_ge - psi0.c_eg) * inv_sqrt2;
  const std::complex<double> bp =
      bp0 * std::exp(std::complex<double>(-0.5 * rates.gamma_plus * t, -rates.shift * t));
  const std::complex<double> bm =
      bm0 * std::exp(std::complex<double>(-0.5 * rates.gamma_minus * t, rates.shift * t));
  return Amplitudes{(bp - bm) * inv_sqrt2, (bp + bm) * inv_sqrt2};
}

double photon_emission_probability(const Amplitudes& a) {
  return 1.0 - std::norm(a.b1) - std::norm(a.b2);
}

Eigen::Matrix4cd density_matrix(const Amplitudes& a) {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const double n1 = std::norm(a.b1);
  const double n2 = std::norm(a.b2);
  rho(1, 1) = n1;
  rho(2, 2) = n2;
  rho(1, 2) = a.b1 * std::conj(a.b2);
  rho(2, 1) = std::conj(rho(1, 2));
  rho(3, 3) = 1.0 - n1 - n2;
  return rho;
}

double concurrence(const Eigen::Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("concurrence: eigensolver failed to converge");
  Eigen::Vector4d d = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (d(i) < 0.0) {
      if (d(i) < kEigClamp)
        throw std::runtime_error(
            "concurrence: density-matrix spectrum significantly negative; input is "
            "not a physical density matrix");
      d(i) = 0.0;
    }
  }
  const Eigen::Matrix4cd root =
      es.eigenvectors() * d.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  // sqrt(rho) rho~ sqrt(rho) = M M^dagger with M = sqrt(rho) F conj(sqrt(rho)),
  // so the Wootters lambdas are the singular values of M (descending already).
  const Eigen::Matrix4cd m = root * spin_flip() * root.conjugate();
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
  const Eigen::Vector4d& lam = svd.singularValues();
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double concurrence_x_state(const Eigen::Matrix4cd& rho) {
  // guard: all entries off the diagonal and anti-diagonal must vanish
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(rho(i, j)) > 1e-12)
        throw std::invalid_argument("concurrence_x_state: matrix is not X-shaped");
  const double r11 = rho(0, 0).real();
  const double r22 = rho(1, 1).real();
  const double r33 = rho(2, 2).real();
  const double r44 = rho(3, 3).real();
  const double c1 = std::abs(rho(0, 3)) - std::sqrt(std::max(0.0, r22 * r33));
  const double c2 = std::abs(rho(1, 2)) - std::sqrt(std::max(0.0, r11 * r44));
  return 2.0 * std::max({0.0, c1, c2});
}

double l1_coherence(const Eigen::Matrix4cd& rho) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

namespace {

std::vector<TimeSeriesPoint> series_core(const InitialState& psi0, const RateSet& rates,
                                         double t_max, int n_steps, bool use_parallel) {
  if (!(std::isfinite(t_max) && t_max > 0.0))
    throw std::invalid_argument("series: t_max must be positive and finite");
  if (n_steps < 1) throw std::invalid_argument("series: n_steps must be >= 1");
  std::vector<TimeSeriesPoint> out(static_cast<std::size_t>(n_steps) + 1);
  const int n_pts = n_steps + 1;
#pragma omp parallel for schedule(static) if (use_parallel)
  for (int i = 0; i < n_pts; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(n_steps);
    const Amplitudes a = evolve(psi0, rates, t);
    const Eigen::Matrix4cd rho = density_matrix(a);
    TimeSeriesPoint p;
    p.t = t;
    p.b1 = a.b1;
    p.b2 = a.b2;
    p.p_photon = photon_emission_probability(a);
    p.concurrence = concurrence(rho);
    p.l1_coherence = l1_coherence(rho);
    out[static_cast<std::size_t>(i)] = p;
  }
  return out;
}

}  // namespace

std::vector<TimeSeriesPoint> concurrence_series(const InitialState& psi0,
                                                const RateSet& rates, double t_max,
                                                int n_steps) {
  return series_core(psi0, rates, t_max, n_steps, /*use_parallel=*/true);
}

std::vector<TimeSeriesPoint> concurrence_series_serial(const InitialState& psi0,
                                                       const RateSet& rates,
                                                       double t_max, int n_steps) {
  return series_core(psi0, rates, t_max, n_steps, /*use_parallel=*/false);
}

}  // namespace mirrorqed
