// Benchmark of the OpenMP kernels against their serial reference
// implementations.  Also checks that both produce bitwise identical results,
// which the deterministic reduction scheme is supposed to guarantee.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "mirrorqed/core.hpp"
#include "mirrorqed/dynamics.hpp"
#include "mirrorqed/oracle.hpp"
#include "mirrorqed/rates.hpp"
#include "mirrorqed/sweep.hpp"
#include "mirrorqed/validate.hpp"

namespace {

using namespace mirrorqed;
using clock_type = std::chrono::steady_clock;

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

struct Row {
  std::string name;
  std::string size;
  double serial_ms;
  double parallel_ms;
  bool identical;
};

void print_table(const std::vector<Row>& rows) {
  std::printf("%-24s %-16s %12s %12s %9s %10s\n", "kernel", "size", "serial [ms]",
              "omp [ms]", "speedup", "identical");
  for (const Row& r : rows) {
    std::printf("%-24s %-16s %12.2f %12.2f %8.2fx %10s\n", r.name.c_str(),
                r.size.c_str(), r.serial_ms, r.parallel_ms,
                r.serial_ms / r.parallel_ms, r.identical ? "yes" : "NO");
  }
}

}  // namespace

int main() {
  std::printf("omp max threads: %d\n\n", omp_get_max_threads());
  std::vector<Row> rows;

  {
    const auto Rs = log_grid(1e-2, 20.0, 240);
    const auto Zs = log_grid(1e-2, 20.0, 240);
    RateSurface s_serial, s_omp;
    const double ts = best_of(3, [&] { s_serial = rate_surface_serial(PolarizationAxis::X, Rs, Zs); });
    const double tp = best_of(3, [&] { s_omp = rate_surface(PolarizationAxis::X, Rs, Zs); });
    const bool same =
        std::memcmp(s_serial.values.data(), s_omp.values.data(),
                    s_serial.values.size() * sizeof(RateSet)) == 0;
    rows.push_back({"rate_surface", "240x240", ts, tp, same});
  }

  {
    GeometryConfig geom;
    geom.R = 2.0;
    geom.Z = 1.0;
    QuadratureParams qp;
    qp.polar_order = 512;
    qp.azimuth_order = 1024;
    OracleResult r_serial{}, r_omp{};
    const double ts = best_of(3, [&] {
      r_serial = modesum_rate_serial(PolarizationAxis::Z, PairKind::Cross, geom, qp);
    });
    const double tp = best_of(3, [&] {
      r_omp = modesum_rate(PolarizationAxis::Z, PairKind::Cross, geom, qp);
    });
    const bool same = std::memcmp(&r_serial.value, &r_omp.value, sizeof(double)) == 0;
    rows.push_back({"modesum_rate", "512x1024 (x2)", ts, tp, same});
  }

  {
    GeometryConfig geom;
    geom.R = 1.0;
    geom.Z = 0.5;
    const RateSet rs = collective_rates(PolarizationAxis::X, geom);
    const InitialState psi0 = InitialState::psi_plus();
    std::vector<TimeSeriesPoint> a, b;
    const double ts =
        best_of(3, [&] { a = concurrence_series_serial(psi0, rs, 10.0, 200000); });
    const double tp = best_of(3, [&] { b = concurrence_series(psi0, rs, 10.0, 200000); });
    const bool same =
        std::memcmp(a.data(), b.data(), a.size() * sizeof(TimeSeriesPoint)) == 0;
    rows.push_back({"concurrence_series", "200001 pts", ts, tp, same});
  }

  {
    const std::vector<double> grid = {1.0, 2.0};
    QuadratureParams qp;
    ValidationSummary a, b;
    const double ts = best_of(1, [&] { a = run_validation(grid, grid, qp, false); });
    const double tp = best_of(1, [&] { b = run_validation(grid, grid, qp, true); });
    bool same = a.records.size() == b.records.size();
    for (size_t i = 0; same && i < a.records.size(); ++i) {
      same = std::memcmp(&a.records[i].closed_form, &b.records[i].closed_form,
                         sizeof(double)) == 0 &&
             a.records[i].abs_diff == b.records[i].abs_diff;
    }
    rows.push_back({"run_validation", "2x2 grid", ts, tp, same});
  }

  std::printf("\n");
  print_table(rows);
  bool all_same = true;
  for (const Row& r : rows) all_same = all_same && r.identical;
  return all_same ? 0 : 1;
}
