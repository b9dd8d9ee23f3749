#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirrorqed/core.hpp"
#include "mirrorqed/dynamics.hpp"
#include "mirrorqed/rates.hpp"
#include "mirrorqed/sweep.hpp"
#include "mirrorqed/validate.hpp"

namespace {

using namespace mirrorqed;

// Geometry/polarization inputs shared by the subcommands: either a JSON
// config file, or direct dimensionless flags (normalized units).
struct GeometryCli {
  std::string config_path;
  double R = 0.0;
  double Z = 0.0;
  bool unbounded = false;
  std::string pol;

  void attach(CLI::App* cmd) {
    auto* config = cmd->add_option("--config", config_path,
                                   "JSON config file (supports physical units)");
    auto* r = cmd->add_option("--R", R, "dimensionless atom-atom separation r*omega0/c");
    auto* z = cmd->add_option("--Z", Z, "dimensionless atom-image distance 2*z0*omega0/c");
    auto* u = cmd->add_flag("--unbounded", unbounded, "no mirror (drops boundary terms)");
    auto* p = cmd->add_option("--pol", pol, "dipole orientation: x, y or z");
    config->excludes(r)->excludes(z)->excludes(u)->excludes(p);
    z->excludes(u);
  }

  SimulationConfig resolve() const {
    if (!config_path.empty()) return load_config(config_path);
    if (!(R > 0.0)) throw std::invalid_argument("usage: provide --R > 0 (or --config)");
    if (!unbounded && !(Z > 0.0))
      throw std::invalid_argument("usage: provide --Z > 0 or --unbounded (or --config)");
    if (pol.empty()) throw std::invalid_argument("usage: provide --pol x|y|z (or --config)");
    SimulationConfig cfg;
    cfg.atom = AtomParams::normalized();
    cfg.geometry.R = R;
    if (!unbounded) cfg.geometry.Z = Z;
    cfg.polarization = polarization_from_string(pol);
    return cfg;
  }
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  return file;
}

int cmd_rates(const GeometryCli& gcli, bool as_json) {
  const SimulationConfig cfg = gcli.resolve();
  const RateSet rs = collective_rates(cfg.polarization, cfg.geometry);
  const bool physical = cfg.atom.mode == UnitMode::Physical;
  const double g0 = gamma0(cfg.atom);
  if (as_json) {
    nlohmann::ordered_json o;
    o["mode"] = physical ? "physical" : "normalized";
    o["polarization"] = to_string(cfg.polarization);
    o["R"] = cfg.geometry.R;
    if (cfg.geometry.Z)
      o["Z"] = *cfg.geometry.Z;
    else
      o["Z"] = nullptr;
    o["gamma11"] = rs.gamma11;
    o["gamma12"] = rs.gamma12;
    o["gamma_plus"] = rs.gamma_plus;
    o["gamma_minus"] = rs.gamma_minus;
    o["shift"] = rs.shift;
    if (physical) {
      o["gamma0_si"] = g0;
      nlohmann::ordered_json si;
      si["gamma11"] = rs.gamma11 * g0;
      si["gamma12"] = rs.gamma12 * g0;
      si["gamma_plus"] = rs.gamma_plus * g0;
      si["gamma_minus"] = rs.gamma_minus * g0;
      si["shift"] = rs.shift * g0;
      o["rates_si"] = si;
    }
    std::cout << o.dump(2) << "\n";
    return 0;
  }
  std::printf("polarization  = %s\n", to_string(cfg.polarization).c_str());
  std::printf("R             = %.17g\n", cfg.geometry.R);
  if (cfg.geometry.Z)
    std::printf("Z             = %.17g\n", *cfg.geometry.Z);
  else
    std::printf("Z             = unbounded\n");
  std::printf("gamma11       = %.17g\n", rs.gamma11);
  std::printf("gamma12       = %.17g\n", rs.gamma12);
  std::printf("gamma_plus    = %.17g\n", rs.gamma_plus);
  std::printf("gamma_minus   = %.17g\n", rs.gamma_minus);
  std::printf("shift         = %.17g\n", rs.shift);
  if (physical) {
    std::printf("gamma0_si     = %.17g 1/s\n", g0);
    std::printf("gamma_plus_si = %.17g 1/s\n", rs.gamma_plus * g0);
    std::printf("gamma_minus_si= %.17g 1/s\n", rs.gamma_minus * g0);
  }
  return 0;
}

int cmd_sweep(const std::string& pol, double r_min, double r_max, int r_count,
              double z_min, double z_max, int z_count, const std::string& spacing,
              const std::string& out_path, bool serial) {
  const PolarizationAxis axis = polarization_from_string(pol);
  std::vector<double> Rs, Zs;
  if (spacing == "log") {
    Rs = log_grid(r_min, r_max, r_count);
    Zs = log_grid(z_min, z_max, z_count);
  } else if (spacing == "linear") {
    Rs = linear_grid(r_min, r_max, r_count);
    Zs = linear_grid(z_min, z_max, z_count);
  } else {
    throw std::invalid_argument("usage: --spacing must be 'log' or 'linear'");
  }
  const RateSurface s =
      serial ? rate_surface_serial(axis, Rs, Zs) : rate_surface(axis, Rs, Zs);
  std::ofstream file;
  std::ostream& os = open_sink(out_path, file);
  write_sweep_csv(os, s);
  os.flush();
  if (!os) throw std::runtime_error("failed writing sweep output");
  return 0;
}

int cmd_dynamics(const GeometryCli& gcli, const std::string& state,
                 std::vector<double> c_eg, std::vector<double> c_ge, double t_max,
                 int steps, const std::string& out_path) {
  const SimulationConfig cfg = gcli.resolve();
  InitialState psi0 = InitialState::psi_plus();
  if (state == "psi_plus") {
    psi0 = InitialState::psi_plus();
  } else if (state == "psi_minus") {
    psi0 = InitialState::psi_minus();
  } else if (state == "custom") {
    if (c_eg.size() != 2 || c_ge.size() != 2)
      throw std::invalid_argument(
          "usage: --state custom requires --c-eg RE IM and --c-ge RE IM");
    psi0 = InitialState::custom({c_eg[0], c_eg[1]}, {c_ge[0], c_ge[1]});
  } else {
    throw std::invalid_argument("usage: --state must be psi_plus, psi_minus or custom");
  }
  const RateSet rs = collective_rates(cfg.polarization, cfg.geometry);
  const auto series = concurrence_series(psi0, rs, t_max, steps);
  std::ofstream file;
  std::ostream& os = open_sink(out_path, file);
  os << "t,re_b1,im_b1,re_b2,im_b2,p_photon,concurrence,l1_coherence\n";
  char buf[512];
  for (const TimeSeriesPoint& p : series) {
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.t,
                  p.b1.real(), p.b1.imag(), p.b2.real(), p.b2.imag(), p.p_photon,
                  p.concurrence, p.l1_coherence);
    os << buf;
  }
  os.flush();
  if (!os) throw std::runtime_error("failed writing dynamics output");
  return 0;
}

int cmd_validate(const std::vector<double>& grid, double tol, double pv_tol,
                 const std::string& out_path, bool serial) {
  for (double v : grid)
    if (!(std::isfinite(v) && v > 0.0))
      throw std::invalid_argument("usage: --grid values must be positive");
  const ValidationSummary summary =
      run_validation(grid, grid, QuadratureParams{}, !serial);
  std::ofstream file;
  std::ostream& os = open_sink(out_path, file);
  write_validation_json(os, summary);
  os.flush();
  if (!os) throw std::runtime_error("failed writing validation output");
  const bool ok =
      summary.max_rate_abs_diff <= tol && summary.max_pv_rel_diff <= pv_tol;
  std::fprintf(stderr,
               "validate: max rate |closed - oracle| = %.3g (tol %.3g), "
               "max pv rel diff = %.3g (tol %.3g), all converged = %s\n",
               summary.max_rate_abs_diff, tol, summary.max_pv_rel_diff, pv_tol,
               summary.all_converged ? "yes" : "no");
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective decay and entanglement of two dipoles near a mirror"};
  app.require_subcommand(1);

  // rates
  auto* rates_cmd = app.add_subcommand("rates", "print collective rates at one geometry");
  GeometryCli rates_geom;
  rates_geom.attach(rates_cmd);
  bool rates_json = false;
  rates_cmd->add_flag("--json", rates_json, "emit JSON instead of the table");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "rate surfaces over an (R, Z) grid, CSV");
  std::string sweep_pol = "x", sweep_spacing = "log", sweep_out = "-";
  double r_min = 0.1, r_max = 10.0, z_min = 0.1, z_max = 10.0;
  int r_count = 50, z_count = 50;
  bool sweep_serial = false;
  sweep_cmd->add_option("--pol", sweep_pol, "dipole orientation: x, y or z");
  sweep_cmd->add_option("--R-min", r_min, "grid start for R")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--R-max", r_max, "grid end for R")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--R-count", r_count, "grid points for R")
      ->check(CLI::Range(1, 100000));
  sweep_cmd->add_option("--Z-min", z_min, "grid start for Z")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--Z-max", z_max, "grid end for Z")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--Z-count", z_count, "grid points for Z")
      ->check(CLI::Range(1, 100000));
  sweep_cmd->add_option("--spacing", sweep_spacing, "log or linear (default log)");
  sweep_cmd->add_option("--out", sweep_out, "output file, '-' for stdout");
  sweep_cmd->add_flag("--serial", sweep_serial, "use the serial reference kernel");

  // dynamics
  auto* dyn_cmd = app.add_subcommand("dynamics", "amplitude/concurrence trajectory, CSV");
  GeometryCli dyn_geom;
  dyn_geom.attach(dyn_cmd);
  std::string dyn_state = "psi_plus", dyn_out = "-";
  std::vector<double> dyn_ceg, dyn_cge;
  double dyn_tmax = 10.0;
  int dyn_steps = 200;
  dyn_cmd->add_option("--state", dyn_state, "psi_plus, psi_minus or custom");
  dyn_cmd->add_option("--c-eg", dyn_ceg, "custom amplitude on |eg>: RE IM")
      ->expected(2);
  dyn_cmd->add_option("--c-ge", dyn_cge, "custom amplitude on |ge>: RE IM")
      ->expected(2);
  dyn_cmd->add_option("--t-max", dyn_tmax, "end time in units of 1/gamma0")
      ->check(CLI::PositiveNumber);
  dyn_cmd->add_option("--steps", dyn_steps, "number of steps")->check(CLI::Range(1, 10000000));
  dyn_cmd->add_option("--out", dyn_out, "output file, '-' for stdout");

  // validate
  auto* val_cmd =
      app.add_subcommand("validate", "closed forms vs numeric oracles, JSON report");
  std::vector<double> val_grid = default_validation_grid();
  double val_tol = 1e-4, val_pv_tol = 1e-2;
  std::string val_out = "-";
  bool val_serial = false;
  val_cmd->add_option("--grid", val_grid, "R and Z grid values")->delimiter(',');
  val_cmd->add_option("--tol", val_tol, "max allowed |closed - oracle| for rates");
  val_cmd->add_option("--pv-tol", val_pv_tol, "max allowed relative shift mismatch");
  val_cmd->add_option("--out", val_out, "output file, '-' for stdout");
  val_cmd->add_flag("--serial", val_serial, "run the fan-out serially");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (rates_cmd->parsed()) return cmd_rates(rates_geom, rates_json);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_pol, r_min, r_max, r_count, z_min, z_max, z_count,
                       sweep_spacing, sweep_out, sweep_serial);
    if (dyn_cmd->parsed())
      return cmd_dynamics(dyn_geom, dyn_state, dyn_ceg, dyn_cge, dyn_tmax, dyn_steps,
                          dyn_out);
    if (val_cmd->parsed())
      return cmd_validate(val_grid, val_tol, val_pv_tol, val_out, val_serial);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
