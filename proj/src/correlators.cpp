#include "mirrorqed/correlators.hpp"

#include <cmath>
#include <stdexcept>

#include "mirrorqed/detail/wightman_impl.hpp"

namespace mirrorqed {

namespace {

using cld = std::complex<long double>;

void check_eps(double eps) {
  if (!(std::isfinite(eps) && eps > 0.0))
    throw std::invalid_argument("correlator: eps must be positive and finite");
}

void check_time(double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("correlator: t must be finite");
}

void check_length(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0))
    throw std::invalid_argument(std::string("correlator: ") + name +
                                " must be positive and finite");
}

std::complex<double> narrow(const cld& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

int axis_index(PolarizationAxis a) {
  return (a == PolarizationAxis::X) ? 0 : (a == PolarizationAxis::Y) ? 1 : 2;
}

}  // namespace

std::complex<double> wightman_xx_same_free(double t, double eps) {
  check_time(t);
  check_eps(eps);
  return narrow(detail::xx_same_free<cld, long double>(t, eps));
}

std::complex<double> wightman_xx_same_bounded(double t, double Z, double eps) {
  check_time(t);
  check_length(Z, "Z");
  check_eps(eps);
  return narrow(detail::xx_same_bounded<cld, long double>(t, Z, eps));
}

std::complex<double> wightman_xx_cross_free(double t, double R, double eps) {
  check_time(t);
  check_length(R, "R");
  check_eps(eps);
  return narrow(detail::xx_cross_free<cld, long double>(t, R, eps));
}

std::complex<double> wightman_xx_cross_bounded(double t, double R, double Z, double eps) {
  check_time(t);
  check_length(R, "R");
  check_length(Z, "Z");
  check_eps(eps);
  return narrow(detail::xx_cross_bounded<cld, long double>(t, R, Z, eps));
}

std::complex<double> wightman_same(PolarizationAxis axis, double t,
                                   std::optional<double> Z, double eps) {
  check_time(t);
  check_eps(eps);
  if (Z) check_length(*Z, "Z");
  return narrow(detail::d_component<cld, long double>(
      axis_index(axis), /*same_pair=*/true, Z.has_value(), 0.0L,
      Z ? static_cast<long double>(*Z) : 0.0L, t, eps));
}

std::complex<double> wightman_cross(PolarizationAxis axis, double t, double R,
                                    std::optional<double> Z, double eps) {
  check_time(t);
  check_length(R, "R");
  check_eps(eps);
  if (Z) check_length(*Z, "Z");
  return narrow(detail::d_component<cld, long double>(
      axis_index(axis), /*same_pair=*/false, Z.has_value(), R,
      Z ? static_cast<long double>(*Z) : 0.0L, t, eps));
}

}  // namespace mirrorqed
