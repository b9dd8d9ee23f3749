#include "mirrorqed/core.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mirrorqed {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("config: " + msg);
}

double require_number(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) fail("key '" + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_string()) fail("key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

SimulationConfig parse_config_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top-level value must be an object");

  static const std::set<std::string> known = {"mode",      "omega0", "dipole_sq",
                                              "r",         "z0",     "polarization"};
  for (const auto& item : j.items()) {
    if (known.find(item.key()) == known.end()) fail("unknown key '" + item.key() + "'");
  }

  SimulationConfig cfg;

  std::string mode = "normalized";
  if (j.contains("mode")) mode = require_string(j, "mode");
  if (mode == "normalized") {
    cfg.atom.mode = UnitMode::Normalized;
  } else if (mode == "physical") {
    cfg.atom.mode = UnitMode::Physical;
  } else {
    fail("key 'mode' must be \"normalized\" or \"physical\" (got \"" + mode + "\")");
  }

  if (cfg.atom.mode == UnitMode::Physical) {
    if (!j.contains("omega0")) fail("physical mode requires key 'omega0'");
    if (!j.contains("dipole_sq")) fail("physical mode requires key 'dipole_sq'");
  }
  if (j.contains("omega0")) {
    cfg.atom.omega0 = require_number(j, "omega0");
    if (!(std::isfinite(cfg.atom.omega0) && cfg.atom.omega0 > 0.0))
      fail("key 'omega0' must be positive and finite");
  }
  if (j.contains("dipole_sq")) {
    cfg.atom.dipole_sq = require_number(j, "dipole_sq");
    if (!(std::isfinite(cfg.atom.dipole_sq) && cfg.atom.dipole_sq > 0.0))
      fail("key 'dipole_sq' must be positive and finite");
  }

  if (!j.contains("r")) fail("missing required key 'r'");
  const double r = require_number(j, "r");
  if (!(std::isfinite(r) && r > 0.0)) fail("key 'r' must be positive and finite");

  if (!j.contains("z0")) fail("missing required key 'z0' (number or \"unbounded\")");
  std::optional<double> z0;
  const auto& z0v = j.at("z0");
  if (z0v.is_string()) {
    if (z0v.get<std::string>() != "unbounded")
      fail("key 'z0' must be a number or \"unbounded\"");
  } else if (z0v.is_number()) {
    z0 = z0v.get<double>();
    if (!(std::isfinite(*z0) && *z0 > 0.0)) fail("key 'z0' must be positive and finite");
  } else {
    fail("key 'z0' must be a number or \"unbounded\"");
  }

  try {
    cfg.geometry = make_geometry(r, z0, cfg.atom);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  if (!j.contains("polarization")) fail("missing required key 'polarization'");
  try {
    cfg.polarization = polarization_from_string(require_string(j, "polarization"));
  } catch (const std::invalid_argument&) {
    fail("key 'polarization' must be one of \"x\", \"y\", \"z\"");
  }

  return cfg;
}

SimulationConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace mirrorqed
