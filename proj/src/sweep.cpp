#include "mirrorqed/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mirrorqed {

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
    throw std::invalid_argument("grid: need finite lo <= hi");
  std::vector<double> g(n);
  g[0] = lo;
  for (int i = 1; i < n - 1; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  if (n > 1) g[n - 1] = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
  if (!(std::isfinite(lo) && std::isfinite(hi) && 0.0 < lo && lo <= hi))
    throw std::invalid_argument("grid: need finite 0 < lo <= hi");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  g[0] = lo;
  for (int i = 1; i < n - 1; ++i)
    g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
  if (n > 1) g[n - 1] = hi;
  return g;
}

namespace {

RateSurface surface_core(PolarizationAxis axis, const std::vector<double>& Rs,
                         const std::vector<double>& Zs, bool use_parallel) {
  if (Rs.empty() || Zs.empty())
    throw std::invalid_argument("rate_surface: grids must be non-empty");
  RateSurface s;
  s.axis = axis;
  s.R = Rs;
  s.Z = Zs;
  const int nr = static_cast<int>(Rs.size());
  const int nz = static_cast<int>(Zs.size());
  s.values.resize(static_cast<std::size_t>(nr) * nz);
#pragma omp parallel for collapse(2) schedule(static) if (use_parallel)
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nz; ++j) {
      GeometryConfig geom;
      geom.R = Rs[static_cast<std::size_t>(i)];
      geom.Z = Zs[static_cast<std::size_t>(j)];
      s.values[static_cast<std::size_t>(i) * nz + j] = collective_rates(axis, geom);
    }
  }
  return s;
}

}  // namespace

RateSurface rate_surface(PolarizationAxis axis, const std::vector<double>& Rs,
                         const std::vector<double>& Zs) {
  return surface_core(axis, Rs, Zs, /*use_parallel=*/true);
}

RateSurface rate_surface_serial(PolarizationAxis axis, const std::vector<double>& Rs,
                                const std::vector<double>& Zs) {
  return surface_core(axis, Rs, Zs, /*use_parallel=*/false);
}

void write_sweep_csv(std::ostream& os, const RateSurface& surface) {
  static const char* kQuantities[] = {"gamma11", "gamma12", "gamma_plus",
                                      "gamma_minus", "shift"};
  char buf[512];
  os << "pol,R,Z,quantity,value\n";
  const std::string pol = to_string(surface.axis);
  const std::size_t nz = surface.Z.size();
  for (std::size_t i = 0; i < surface.R.size(); ++i) {
    for (std::size_t j = 0; j < nz; ++j) {
      const RateSet& rs = surface.values[i * nz + j];
      const double q[5] = {rs.gamma11, rs.gamma12, rs.gamma_plus, rs.gamma_minus,
                           rs.shift};
      for (int k = 0; k < 5; ++k) {
        std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%s,%.17g\n", pol.c_str(),
                      surface.R[i], surface.Z[j], kQuantities[k], q[k]);
        os << buf;
      }
    }
  }
}

}  // namespace mirrorqed
