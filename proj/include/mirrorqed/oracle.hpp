#pragma once

#include "mirrorqed/core.hpp"

#include <string>

namespace mirrorqed {

// Which pair correlation a rate oracle targets: the same-atom function
// (gamma_11) or the cross-atom function (gamma_12).
enum class PairKind { Same, Cross };

// Labels used in validation output: "gamma11" / "gamma12".
std::string pair_label(PairKind pair);

struct QuadratureParams {
  // transform oracle
  double eps0 = 1e-3;    // largest regulator of the extrapolation ladder (halved twice)
  double t_max = 200.0;  // two-sided truncation of the time integral
  // spectral (principal-value) oracle
  double omega_cut = 64.0;    // spectral cutoff in units of omega0
  bool tail_average = true;   // iterated half-period averaging beyond omega_cut
  // mode-sum oracle
  int polar_order = 64;    // Gauss-Legendre order in cos(theta)
  int azimuth_order = 128; // trapezoid points in phi
  // convergence-diagnostic thresholds (not accuracy knobs: the intrinsic
  // accuracy of each oracle is far better; these decide the `converged` flag)
  double abs_tol = 1e-7;
  double rel_tol = 1e-3;
};

struct OracleResult {
  double value = 0.0;
  double err_estimate = 0.0;  // extrapolation residual / doubling difference + truncation
  double order = 0.0;         // empirical order of the regulator ladder (0 = at roundoff)
  bool converged = false;
};

// Decay-rate oracle #1: two-sided Fourier transform of the regularized
// correlator at the transition frequency, evaluated on a ladder of
// regulators eps0, eps0/2, eps0/4 and Richardson-extrapolated to eps -> 0,
// then normalized by the same-pipeline free-space same-point transform.
// Never calls the closed-form rate expressions.
OracleResult ft_rate(PolarizationAxis axis, PairKind pair, const GeometryConfig& geom,
                     const QuadratureParams& qp = {});

// The raw (unnormalized) extrapolated transform of the free-space same-point
// correlator; analytic value 1/(3 pi).  Exposed so the pipeline scale can be
// tested directly and shared across batched ft_rate calls.
double ft_normalizer(const QuadratureParams& qp = {});
OracleResult ft_rate(PolarizationAxis axis, PairKind pair, const GeometryConfig& geom,
                     const QuadratureParams& qp, double normalizer);

// Decay-rate oracle #2: angular integral of the boundary-adapted mode
// density over the resonant wavevector shell (direct term minus reflected
// image term).  Spectrally convergent; the error estimate comes from
// doubling both angular orders.  The default entry point parallelizes over
// polar nodes with per-node partial sums merged in fixed order, so its
// result is bitwise identical to the serial sibling for any thread count.
OracleResult modesum_rate(PolarizationAxis axis, PairKind pair, const GeometryConfig& geom,
                          const QuadratureParams& qp = {});
OracleResult modesum_rate_serial(PolarizationAxis axis, PairKind pair,
                                 const GeometryConfig& geom,
                                 const QuadratureParams& qp = {});

// Shift oracle: principal value of the cross spectral density against
// 2 w / (w^2 - 1) over w in (0, omega_cut), with symmetric-window pole
// subtraction and per-term oscillatory tail averaging; the convergence check
// doubles omega_cut.  Rejects separations where the closed-form magnitude
// exceeds 1e6 (the near-contact divergence), since no finite spectral
// quadrature is meaningful there.
OracleResult pv_shift(PolarizationAxis axis, const GeometryConfig& geom,
                      const QuadratureParams& qp = {});

}  // namespace mirrorqed
