#pragma once

#include <string>
#include <vector>

#include "sweep.hpp"

namespace cryoeo {

// Grid descriptions consumed by the sweep scenarios.
struct SweepParams {
  int points = 151;
  double power_min = 0.0;        // W
  double power_max = 1.5e-3;     // W
  double coupling_min = 0.0;
  double coupling_max = 1.0;
  std::vector<double> thickness_values = {100e-6, 200e-6, 300e-6, 400e-6,
                                          500e-6};  // m
  std::string optimize_variable = "power";  // or "coupling"
};

// Complete description of one run: what to do, where to write, and the
// full physical chain.
struct RunConfig {
  std::string scenario;
  std::string output_dir = "out";
  bool svg = false;
  bool dump_mesh = false;
  int jobs = 0;  // 0 = all hardware threads
  ChainContext chain;
  SolverConfig solver;
  SweepParams sweep;
};

// Parse sectioned key = value text ('#' and ';' start comments) on top of
// an existing configuration; unknown sections or keys fail with the line
// number.  parse_config starts from defaults.
void apply_config(RunConfig& cfg, const std::string& text);
[[nodiscard]] RunConfig parse_config(const std::string& text);
[[nodiscard]] RunConfig parse_config_file(const std::string& path);
void apply_config_file(RunConfig& cfg, const std::string& path);

// Ready-made figure configurations.
[[nodiscard]] bool is_preset(const std::string& name);
[[nodiscard]] std::vector<std::string> preset_names();
[[nodiscard]] RunConfig preset_config(const std::string& name);

}  // namespace cryoeo
