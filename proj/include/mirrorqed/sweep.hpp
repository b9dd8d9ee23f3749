#pragma once

#include "mirrorqed/core.hpp"
#include "mirrorqed/rates.hpp"

#include <iosfwd>
#include <vector>

namespace mirrorqed {

// Inclusive-endpoint grids.  n == 1 degenerates to {lo}.  Endpoints are
// assigned exactly (no accumulated drift).
std::vector<double> linear_grid(double lo, double hi, int n);
std::vector<double> log_grid(double lo, double hi, int n);  // geometric spacing

// Collective rates tabulated over an (R, Z) grid at fixed polarization,
// row-major with Z fastest: values[i * Z.size() + j] belongs to (R[i], Z[j]).
struct RateSurface {
  PolarizationAxis axis = PolarizationAxis::X;
  std::vector<double> R;
  std::vector<double> Z;
  std::vector<RateSet> values;
};

// The default entry point computes grid slots in parallel (each slot written
// independently) and is bitwise identical to the serial sibling for any
// thread count.
RateSurface rate_surface(PolarizationAxis axis, const std::vector<double>& Rs,
                         const std::vector<double>& Zs);
RateSurface rate_surface_serial(PolarizationAxis axis, const std::vector<double>& Rs,
                                const std::vector<double>& Zs);

// CSV rows "pol,R,Z,quantity,value" (header included), quantities emitted in
// the fixed order gamma11, gamma12, gamma_plus, gamma_minus, shift; values
// formatted with %.17g; LF line endings.  Deterministic byte-for-byte.
void write_sweep_csv(std::ostream& os, const RateSurface& surface);

}  // namespace mirrorqed
