#pragma once

#include "mirrorqed/core.hpp"
#include "mirrorqed/rates.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace mirrorqed {

// Site-basis excitation amplitudes at a given time.
struct Amplitudes {
  std::complex<double> b1;  // amplitude on |e g>
  std::complex<double> b2;  // amplitude on |g e>
};

// Closed-form single-excitation evolution.  The symmetric / antisymmetric
// superpositions decay independently,
//   b+(t) = b+(0) exp(-(gamma_plus/2 + iV) t)
//   b-(t) = b-(0) exp(-(gamma_minus/2 - iV) t)
// and the site amplitudes are recovered by the inverse rotation.  Times are
// in units of 1/gamma0.
Amplitudes evolve(const InitialState& psi0, const RateSet& rates, double t);

double photon_emission_probability(const Amplitudes& a);  // 1 - |b1|^2 - |b2|^2

// Two-atom density matrix in the product basis {|ee>, |eg>, |ge>, |gg>}:
// the coherent single-excitation block plus the ground-state population fed
// by the emitted photon.
Eigen::Matrix4cd density_matrix(const Amplitudes& a);

// Wootters concurrence of an arbitrary two-qubit state.  The spin-flip
// spectrum is evaluated through the Hermitian square root: the Wootters
// lambda_i are the singular values of sqrt(rho) * F * conj(sqrt(rho)) with
// F = sigma_y (x) sigma_y, which avoids the sqrt-of-eigenvalue noise
// amplification of the non-Hermitian rho * rho~ product near its null space.
// Density-matrix eigenvalues in [-1e-10, 0) are treated as rounding and
// clamped to zero; anything more negative raises.
double concurrence(const Eigen::Matrix4cd& rho);

// Closed form valid for X-shaped states (nonzero entries on the diagonal and
// anti-diagonal only); cross-checks the eigenvalue route.
double concurrence_x_state(const Eigen::Matrix4cd& rho);

double l1_coherence(const Eigen::Matrix4cd& rho);  // sum of |off-diagonal| entries

struct TimeSeriesPoint {
  double t = 0.0;
  std::complex<double> b1, b2;
  double p_photon = 0.0;
  double concurrence = 0.0;
  double l1_coherence = 0.0;
};

// Uniform trajectory on [0, t_max] with n_steps + 1 points.  The default
// entry point evaluates time slots in parallel (each slot independent) and
// is bitwise identical to the serial sibling for any thread count.
std::vector<TimeSeriesPoint> concurrence_series(const InitialState& psi0,
                                                const RateSet& rates, double t_max,
                                                int n_steps);
std::vector<TimeSeriesPoint> concurrence_series_serial(const InitialState& psi0,
                                                       const RateSet& rates,
                                                       double t_max, int n_steps);

}  // namespace mirrorqed
