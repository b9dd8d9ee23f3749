#pragma once

#include "mirrorqed/core.hpp"

namespace mirrorqed {

// Small-argument handling of the rate kernels.  Auto switches from the closed
// trigonometric forms to order-8 Taylor polynomials whenever the relevant
// dimensionless argument drops strictly below 1e-2 (the threshold itself
// takes the closed form).  ClosedForm / Series force a branch; both are kept
// reachable so the overlap window can be tested directly.
enum class EvalPath { Auto, ClosedForm, Series };

// Single-atom decay rate gamma_11 in units of gamma0.  Depends only on the
// atom-image distance Z and the dipole orientation:
//   x, y (dipole parallel to the mirror):  suppressed toward contact, ~ Z^2/5
//   z (dipole normal to the mirror):       enhanced toward contact, -> 2
// Unbounded geometry returns exactly 1.
double gamma11(PolarizationAxis axis, const GeometryConfig& geom,
               EvalPath path = EvalPath::Auto);

// Cross-atom decay rate gamma_12 in units of gamma0: direct contribution at
// separation R plus (when bounded) the reflected contribution at the
// atom-to-image distance sqrt(R^2 + Z^2), weighted by the image-dipole
// projection.  Reduces to gamma_11 in the coincidence limit R -> 0.
double gamma12(PolarizationAxis axis, const GeometryConfig& geom,
               EvalPath path = EvalPath::Auto);

// Coherent dipole-dipole shift V in units of gamma0 (the dispersive partner
// of gamma_12): splits the symmetric/antisymmetric channels by -+ V.  Same
// direct/reflected structure and projection weights as gamma_12.  Diverges
// like R^-3 toward contact; callers probing R -> 0 get the honest closed-form
// value, not a regularized one.
double dipole_shift(PolarizationAxis axis, const GeometryConfig& geom);

struct RateSet {
  double gamma11 = 0.0;
  double gamma12 = 0.0;
  double gamma_plus = 0.0;   // symmetric (superradiant) channel, gamma11 + gamma12
  double gamma_minus = 0.0;  // antisymmetric (subradiant) channel, gamma11 - gamma12
  double shift = 0.0;        // coherent shift V
};

// All collective quantities at once.  The stored fields are reconstituted so
// that gamma_plus + gamma_minus == 2 * gamma11 and
// gamma_plus - gamma_minus == 2 * gamma12 hold exactly in floating point
// (the reconstruction differs from the direct closed forms by at most 1 ulp).
RateSet collective_rates(PolarizationAxis axis, const GeometryConfig& geom,
                         EvalPath path = EvalPath::Auto);

}  // namespace mirrorqed
