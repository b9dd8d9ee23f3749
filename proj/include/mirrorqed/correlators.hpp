#pragma once

#include "mirrorqed/core.hpp"

#include <complex>
#include <optional>

namespace mirrorqed {

// Regularized two-time vacuum field correlators projected on the dipole
// axis, in natural units (hbar = c = 1, lengths and times scaled by omega0).
// All functions take the regulator eps > 0 explicitly; the physical object
// is the eps -> 0 limit, which the transform oracle reaches by
// extrapolation, never by setting eps = 0.  Internals run in
// complex<long double> with factored pole denominators; the tests re-evaluate
// near-pole values at 256-bit precision.

// Explicit x-axis forms.
std::complex<double> wightman_xx_same_free(double t, double eps);
std::complex<double> wightman_xx_same_bounded(double t, double Z, double eps);
std::complex<double> wightman_xx_cross_free(double t, double R, double eps);
std::complex<double> wightman_xx_cross_bounded(double t, double R, double Z, double eps);

// Any diagonal axis; Z == nullopt selects the unbounded configuration.  The
// x-axis paths delegate to the explicit forms above bit-for-bit; y and z are
// assembled from the image construction.
std::complex<double> wightman_same(PolarizationAxis axis, double t,
                                   std::optional<double> Z, double eps);
std::complex<double> wightman_cross(PolarizationAxis axis, double t, double R,
                                    std::optional<double> Z, double eps);

}  // namespace mirrorqed
