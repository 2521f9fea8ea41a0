#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "constants.hpp"
#include "errors.hpp"
#include "logging.hpp"

namespace cryoeo {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  raise(ErrorCode::ParseError, "config",
        "line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

double to_double(int line, const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(line, "key \"" + key + "\" needs a number, got \"" + value + "\"");
  }
}

int to_int(int line, const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(line, "key \"" + key + "\" needs an integer, got \"" + value + "\"");
  }
}

bool to_bool(int line, const std::string& key, const std::string& value) {
  const std::string v = lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(line, "key \"" + key + "\" needs a boolean, got \"" + value + "\"");
}

std::vector<double> to_list(int line, const std::string& key,
                            const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string body = strip(item);
    if (body.empty()) fail(line, "key \"" + key + "\" has an empty entry");
    out.push_back(to_double(line, key, body));
  }
  if (out.empty()) fail(line, "key \"" + key + "\" needs at least one value");
  return out;
}

void apply_run(RunConfig& cfg, int line, const std::string& key,
               const std::string& value) {
  if (key == "scenario") {
    cfg.scenario = value;
  } else if (key == "output_dir") {
    cfg.output_dir = value;
  } else if (key == "state") {
    const std::string v = lower(value);
    if (v == "cat") {
      cfg.chain.state.kind = QuantumState::Kind::Cat;
    } else if (v == "squeezed") {
      cfg.chain.state.kind = QuantumState::Kind::Squeezed;
    } else {
      fail(line, "state must be cat or squeezed, got \"" + value + "\"");
    }
  } else if (key == "svg") {
    cfg.svg = to_bool(line, key, value);
  } else if (key == "jobs") {
    cfg.jobs = to_int(line, key, value);
    if (cfg.jobs < 0) fail(line, "jobs must be non-negative");
  } else {
    fail(line, "unknown key \"" + key + "\" in section [run]");
  }
}

void apply_device(DeviceSpec& dev, int line, const std::string& key,
                  const std::string& value) {
  if (key == "major_radius_m") {
    dev.major_radius = to_double(line, key, value);
  } else if (key == "side_curvature_m") {
    dev.side_curvature = to_double(line, key, value);
  } else if (key == "thickness_m") {
    dev.thickness = to_double(line, key, value);
  } else if (key == "source_radial_inset_m") {
    dev.source_radial_inset = to_double(line, key, value);
  } else if (key == "source_cross_section_radius_m") {
    dev.source_cross_section_radius = to_double(line, key, value);
  } else if (key == "mw_annulus_width_m") {
    dev.mw_annulus_width = to_double(line, key, value);
  } else if (key == "contact_inner_radius_m") {
    dev.contact_inner_radius = to_double(line, key, value);
  } else if (key == "contact_outer_radius_m") {
    dev.contact_outer_radius = to_double(line, key, value);
  } else if (key == "side_contact_height_m") {
    dev.side_contact_height = to_double(line, key, value);
  } else if (key == "include_copper") {
    dev.include_copper = to_bool(line, key, value);
  } else if (key == "copper_shell_thickness_m") {
    dev.copper_shell_thickness = to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [device]");
  }
}

void apply_material(MaterialModel& mat, int line, const std::string& key,
                    const std::string& value) {
  if (key == "name") {
    const std::string v = lower(value);
    if (v == "linbo3" || v == "lithium_niobate") {
      mat = linbo3();
    } else if (v == "copper") {
      mat = copper();
    } else {
      // A custom material: keep the name and expect explicit coefficients.
      mat.name = value;
      log::info("config", "custom material \"" + value + "\"");
    }
  } else if (key == "density_kg_m3") {
    mat.density = to_double(line, key, value);
  } else if (key == "conductivity_coeff_SI") {
    mat.conductivity_coeff = to_double(line, key, value);
  } else if (key == "conductivity_exponent") {
    mat.conductivity_exponent = to_double(line, key, value);
  } else if (key == "heat_capacity_coeff_SI") {
    mat.heat_capacity_coeff = to_double(line, key, value);
  } else if (key == "heat_capacity_exponent") {
    mat.heat_capacity_exponent = to_double(line, key, value);
  } else if (key == "valid_max_temp_K") {
    mat.valid_max_temp = to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [material]");
  }
}

void apply_fridge(FridgeModel& fridge, int line, const std::string& key,
                  const std::string& value) {
  if (key == "base_temp_K") {
    fridge.base_temp = to_double(line, key, value);
  } else if (key == "kappa_f_W_K2") {
    fridge.kappa_f = to_double(line, key, value);
  } else if (key == "table_csv") {
    fridge = load_fridge_table(value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [fridge]");
  }
}

void apply_modes(ModeSystem& ms, int line, const std::string& key,
                 const std::string& value) {
  // Frequencies arrive as plain cycles per second and are stored angular.
  if (key == "microwave_frequency_Hz") {
    ms.mw_frequency = constants::kTwoPi * to_double(line, key, value);
  } else if (key == "pump_wavelength_m") {
    const double lam = to_double(line, key, value);
    if (!(lam > 0.0)) fail(line, "pump wavelength must be positive");
    ms.pump_frequency = constants::kTwoPi * constants::kSpeedOfLight / lam;
  } else if (key == "kappa_i_o_Hz") {
    ms.kappa_i_o = constants::kTwoPi * to_double(line, key, value);
  } else if (key == "kappa_e_o_Hz") {
    ms.kappa_e_o = constants::kTwoPi * to_double(line, key, value);
  } else if (key == "kappa_i_mw_Hz") {
    ms.kappa_i_mw = constants::kTwoPi * to_double(line, key, value);
  } else if (key == "kappa_e_mw_Hz") {
    ms.kappa_e_mw = constants::kTwoPi * to_double(line, key, value);
  } else if (key == "g_Hz") {
    ms.g = constants::kTwoPi * to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [modes]");
  }
}

void apply_state(QuantumState& st, int line, const std::string& key,
                 const std::string& value) {
  if (key == "alpha") {
    st.alpha = to_double(line, key, value);
  } else if (key == "phi_rad") {
    st.phi = to_double(line, key, value);
  } else if (key == "r") {
    st.r = to_double(line, key, value);
  } else if (key == "phi_alpha_rad") {
    st.phi_alpha = to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [state]");
  }
}

void apply_pump(PumpSchedule& pump, int line, const std::string& key,
                const std::string& value) {
  if (key == "mode") {
    const std::string v = lower(value);
    if (v == "cw") {
      pump.mode = PumpSchedule::Mode::Cw;
    } else if (v == "pulsed") {
      pump.mode = PumpSchedule::Mode::Pulsed;
    } else if (v == "instant") {
      pump.mode = PumpSchedule::Mode::Instant;
    } else {
      fail(line, "pump mode must be cw, pulsed or instant, got \"" + value +
                     "\"");
    }
  } else if (key == "power_W") {
    pump.P_o = to_double(line, key, value);
  } else if (key == "tau_s") {
    pump.tau = to_double(line, key, value);
  } else if (key == "duty") {
    pump.duty = to_double(line, key, value);
  } else if (key == "heat_fraction") {
    pump.heat_fraction = to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [pump]");
  }
}

void apply_solver(RunConfig& cfg, int line, const std::string& key,
                  const std::string& value) {
  SolverConfig& s = cfg.solver;
  if (key == "dt_initial_s") {
    s.dt_initial = to_double(line, key, value);
  } else if (key == "dt_max_s") {
    s.dt_max = to_double(line, key, value);
  } else if (key == "end_time_s") {
    s.end_time = to_double(line, key, value);
  } else if (key == "newton_tol") {
    s.newton_tol = to_double(line, key, value);
  } else if (key == "newton_max_iter") {
    s.newton_max_iter = to_int(line, key, value);
  } else if (key == "steady_tol") {
    s.steady_tol = to_double(line, key, value);
  } else if (key == "mesh_nr") {
    cfg.chain.mesh.nr = to_int(line, key, value);
  } else if (key == "mesh_nz") {
    cfg.chain.mesh.nz = to_int(line, key, value);
  } else if (key == "refine_source") {
    cfg.chain.mesh.refine_source = to_double(line, key, value);
  } else {
    fail(line, "unknown key \"" + key + "\" in section [solver]");
  }
}

void apply_sweep(SweepParams& sw, int line, const std::string& key,
                 const std::string& value) {
  if (key == "points") {
    sw.points = to_int(line, key, value);
    if (sw.points < 1) fail(line, "points must be at least 1");
  } else if (key == "power_min_W") {
    sw.power_min = to_double(line, key, value);
  } else if (key == "power_max_W") {
    sw.power_max = to_double(line, key, value);
  } else if (key == "coupling_min") {
    sw.coupling_min = to_double(line, key, value);
  } else if (key == "coupling_max") {
    sw.coupling_max = to_double(line, key, value);
  } else if (key == "thickness_values_m") {
    sw.thickness_values = to_list(line, key, value);
  } else if (key == "optimize_variable") {
    const std::string v = lower(value);
    if (v != "power" && v != "coupling") {
      fail(line, "optimize_variable must be power or coupling");
    }
    sw.optimize_variable = v;
  } else {
    fail(line, "unknown key \"" + key + "\" in section [sweep]");
  }
}

}  // namespace

void apply_config(RunConfig& cfg, const std::string& text) {
  std::stringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t cut = raw.find_first_of("#;");
    std::string body = strip(cut == std::string::npos ? raw : raw.substr(0, cut));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') fail(lineno, "unterminated section header");
      section = lower(strip(body.substr(1, body.size() - 2)));
      if (section != "run" && section != "device" && section != "material" &&
          section != "fridge" && section != "modes" && section != "state" &&
          section != "pump" && section != "solver" && section != "sweep") {
        fail(lineno, "unknown section [" + section + "]");
      }
      continue;
    }
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      fail(lineno, "expected key = value, got \"" + body + "\"");
    }
    const std::string key = strip(body.substr(0, eq));
    const std::string value = strip(body.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    if (value.empty()) fail(lineno, "key \"" + key + "\" has no value");
    if (section.empty()) {
      fail(lineno, "key \"" + key + "\" appears before any section");
    }
    if (section == "run") {
      apply_run(cfg, lineno, key, value);
    } else if (section == "device") {
      apply_device(cfg.chain.device, lineno, key, value);
    } else if (section == "material") {
      apply_material(cfg.chain.material, lineno, key, value);
    } else if (section == "fridge") {
      apply_fridge(cfg.chain.fridge, lineno, key, value);
    } else if (section == "modes") {
      apply_modes(cfg.chain.modes, lineno, key, value);
    } else if (section == "state") {
      apply_state(cfg.chain.state, lineno, key, value);
    } else if (section == "pump") {
      apply_pump(cfg.chain.pump, lineno, key, value);
    } else if (section == "solver") {
      apply_solver(cfg, lineno, key, value);
    } else if (section == "sweep") {
      apply_sweep(cfg.sweep, lineno, key, value);
    }
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  apply_config(cfg, text);
  return cfg;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    raise(ErrorCode::IoError, "config", "cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config(cfg, ss.str());
}

RunConfig parse_config_file(const std::string& path) {
  RunConfig cfg;
  apply_config_file(cfg, path);
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"fig2a", "fig3a", "fig3b", "fig3c", "fig3d",
          "fig4a", "fig4b", "fig4c", "fig4d"};
}

bool is_preset(const std::string& name) {
  const auto names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

RunConfig preset_config(const std::string& name) {
  if (!is_preset(name)) {
    raise(ErrorCode::InvalidArgument, "config",
          "unknown preset \"" + name + "\"");
  }
  RunConfig cfg;
  cfg.scenario = name;
  // Figure runs read the microwave mode out critically coupled; the pump
  // switch-on time constant and the transient horizon match the read-out
  // protocol.
  cfg.chain.modes.kappa_e_mw = constants::kTwoPi * 32.4e6;
  cfg.chain.pump.tau = 2e-6;
  cfg.solver.end_time = 20e-6;

  if (name == "fig2a") {
    cfg.chain.device.thickness = 200e-6;
  } else if (name == "fig3b") {
    // Asymptotic temperatures of the warm-up runs: contacts stay at the
    // unloaded base, as during a pulsed protocol.
    cfg.chain.pump.mode = PumpSchedule::Mode::Pulsed;
  } else if (name == "fig4b" || name == "fig4d") {
    cfg.sweep.points = 101;  // coupling grids
  }
  if (name == "fig4c" || name == "fig4d") {
    cfg.chain.modes.g = constants::kTwoPi * 200.0;
  }
  return cfg;
}

}  // namespace cryoeo
