#pragma once

#include <complex>
#include <optional>
#include <string>

namespace mirrorqed {

// Fundamental constants (SI, CODATA 2018).
namespace constants {
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double eps0 = 8.8541878128e-12;  // F / m
inline constexpr double c_light = 299792458.0;    // m / s (exact)
inline constexpr double pi = 3.141592653589793238462643383279502884;
}  // namespace constants

// Normalized: rates in units of the free-space single-atom decay rate gamma0,
// lengths pre-scaled by omega0/c (i.e. already dimensionless).
// Physical: SI inputs (rad/s, C^2 m^2, meters); rates convert to 1/s at the
// presentation layer via gamma0().
enum class UnitMode { Normalized, Physical };

// Orientation of the (common) transition dipole of the pair.  The atoms sit
// side by side at equal height above the mirror, separated along x; the
// mirror normal is z.
enum class PolarizationAxis { X, Y, Z };

std::string to_string(PolarizationAxis axis);
PolarizationAxis polarization_from_string(const std::string& name);

struct AtomParams {
  UnitMode mode = UnitMode::Normalized;
  double omega0 = 1.0;     // transition angular frequency (rad/s in Physical mode)
  double dipole_sq = 1.0;  // squared transition dipole moment (C^2 m^2 in Physical mode)

  static AtomParams normalized();
  static AtomParams physical(double omega0, double dipole_sq);
};

// Free-space spontaneous emission rate of a single atom.
// Normalized mode: 1 by definition.  Physical mode:
//   gamma0 = dipole_sq * omega0^3 / (3 pi hbar eps0 c^3)   [1/s]
double gamma0(const AtomParams& params);

// Dimensionless geometry of the pair/mirror arrangement:
//   R = r  * omega0 / c   separation of the two atoms (parallel to the mirror)
//   Z = 2 z0 * omega0 / c  atom-to-image distance (z0 = height above the mirror)
// Z == nullopt selects the unbounded configuration (no mirror): boundary
// contributions are dropped exactly, not approximated by a large Z.
struct GeometryConfig {
  double R = 1.0;
  std::optional<double> Z;

  bool bounded() const { return Z.has_value(); }
};

// Builds the dimensionless geometry from mode-dependent inputs (meters in
// Physical mode, dimensionless in Normalized mode).  z0 == nullopt keeps the
// unbounded configuration.  Rejects non-positive or non-finite inputs.
GeometryConfig make_geometry(double r, std::optional<double> z0,
                             const AtomParams& params);

// Initial state restricted to the single-excitation sector,
//   |psi(0)> = c_eg |e g> + c_ge |g e>.
// Factories reject unnormalized amplitudes (tolerance 1e-12).
struct InitialState {
  std::complex<double> c_eg;
  std::complex<double> c_ge;

  static InitialState psi_plus();   // (|eg> + |ge>) / sqrt(2)
  static InitialState psi_minus(); // (|ge> - |eg>) / sqrt(2)
  static InitialState custom(std::complex<double> c_eg, std::complex<double> c_ge);
};

struct SimulationConfig {
  AtomParams atom;
  GeometryConfig geometry;
  PolarizationAxis polarization = PolarizationAxis::X;
};

// JSON configuration ingestion.  Recognized keys:
//   mode         : "normalized" (default) | "physical"
//   omega0       : number  (required in physical mode)
//   dipole_sq    : number  (required in physical mode)
//   r            : number  (required)
//   z0           : number | "unbounded"  (required)
//   polarization : "x" | "y" | "z"       (required)
// Malformed input, unknown keys, wrong types and out-of-range values are
// rejected with a diagnostic naming the offending key.
SimulationConfig parse_config_text(const std::string& json_text);
SimulationConfig load_config(const std::string& path);

}  // namespace mirrorqed
