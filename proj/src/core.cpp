#include "mirrorqed/core.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mirrorqed {

std::string to_string(PolarizationAxis axis) {
  switch (axis) {
    case PolarizationAxis::X: return "x";
    case PolarizationAxis::Y: return "y";
    case PolarizationAxis::Z: return "z";
  }
  throw std::logic_error("unreachable polarization axis");
}

PolarizationAxis polarization_from_string(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "x") return PolarizationAxis::X;
  if (s == "y") return PolarizationAxis::Y;
  if (s == "z") return PolarizationAxis::Z;
  throw std::invalid_argument("polarization must be one of x, y, z (got '" + name + "')");
}

AtomParams AtomParams::normalized() { return AtomParams{}; }

AtomParams AtomParams::physical(double omega0, double dipole_sq) {
  if (!(std::isfinite(omega0) && omega0 > 0.0))
    throw std::invalid_argument("omega0 must be positive and finite");
  if (!(std::isfinite(dipole_sq) && dipole_sq > 0.0))
    throw std::invalid_argument("dipole_sq must be positive and finite");
  return AtomParams{UnitMode::Physical, omega0, dipole_sq};
}

double gamma0(const AtomParams& params) {
  if (params.mode == UnitMode::Normalized) return 1.0;
  if (!(std::isfinite(params.omega0) && params.omega0 > 0.0))
    throw std::invalid_argument("omega0 must be positive and finite");
  if (!(std::isfinite(params.dipole_sq) && params.dipole_sq > 0.0))
    throw std::invalid_argument("dipole_sq must be positive and finite");
  const double w = params.omega0;
  const double c = constants::c_light;
  return params.dipole_sq * w * w * w /
         (3.0 * constants::pi * constants::hbar * constants::eps0 * c * c * c);
}

GeometryConfig make_geometry(double r, std::optional<double> z0,
                             const AtomParams& params) {
  const double c = (params.mode == UnitMode::Physical) ? constants::c_light : 1.0;
  if (!(std::isfinite(r) && r > 0.0))
    throw std::invalid_argument("r must be a positive finite separation");
  GeometryConfig geom;
  geom.R = r * params.omega0 / c;
  if (z0.has_value()) {
    if (!(std::isfinite(*z0) && *z0 > 0.0))
      throw std::invalid_argument("z0 must be a positive finite height (or unbounded)");
    geom.Z = 2.0 * (*z0) * params.omega0 / c;
  }
  return geom;
}

namespace {
constexpr double kNormTol = 1e-12;
}

InitialState InitialState::psi_plus() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return InitialState{{inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}};
}

InitialState InitialState::psi_minus() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return InitialState{{-inv_sqrt2, 0.0}, {inv_sqrt2, 0.0}};
}

InitialState InitialState::custom(std::complex<double> c_eg, std::complex<double> c_ge) {
  const double norm = std::norm(c_eg) + std::norm(c_ge);
  if (std::abs(norm - 1.0) > kNormTol)
    throw std::invalid_argument("initial amplitudes must satisfy |c_eg|^2 + |c_ge|^2 = 1");
  return InitialState{c_eg, c_ge};
}

}  // namespace mirrorqed
