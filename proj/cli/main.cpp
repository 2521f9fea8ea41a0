#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "cryoeo.h"

namespace {

int fail(cryoeo_run_t run, cryoeo_status status) {
  std::fprintf(stderr, "cryo-eo-sim: error: %s\n", cryoeo_last_error(run));
  if (run) cryoeo_run_free(run);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulates laser heating, thermal occupancy and conversion fidelity "
      "of a cryogenic electro-optic transducer"};
  std::string scenario;
  std::string config_path;
  std::string out_dir;
  int jobs = -1;
  bool svg = false;
  bool dump_mesh = false;
  bool show_version = false;
  bool list_artifacts = false;

  app.add_option("scenario", scenario,
                 "Scenario (simulate-thermal, sweep-power, sweep-coupling, "
                 "sweep-thickness, optimize) or figure preset "
                 "(fig2a, fig3a..fig3d, fig4a..fig4d)");
  app.add_option("--config", config_path, "Configuration file (key = value)");
  app.add_option("--jobs", jobs, "Worker threads (default: all cores)");
  app.add_option("--out", out_dir, "Output directory (default: out)");
  app.add_flag("--svg", svg, "Also write SVG quick-look plots");
  app.add_flag("--dump-mesh", dump_mesh, "Also write the solver mesh as CSV");
  app.add_flag("--artifacts", list_artifacts,
               "List every file written after the run");
  app.add_flag("--version", show_version, "Print version and exit");
  CLI11_PARSE(app, argc, argv);

  if (show_version) {
    std::printf("cryo-eo-sim %s\n", cryoeo_version());
    return 0;
  }

  // A positional that names a preset seeds the whole configuration; any
  // --config file then layers overrides on top.  Otherwise the config file
  // (or plain defaults) is the base and the positional picks the scenario.
  cryoeo_run_t run = nullptr;
  bool from_preset = false;
  if (!scenario.empty() &&
      cryoeo_preset(scenario.c_str(), &run) == CRYOEO_OK) {
    from_preset = true;
  }
  if (!run) {
    const cryoeo_status st =
        config_path.empty() ? cryoeo_config_parse("", &run)
                            : cryoeo_config_parse_file(config_path.c_str(),
                                                       &run);
    if (st != CRYOEO_OK) return fail(nullptr, st);
  } else if (!config_path.empty()) {
    const cryoeo_status st =
        cryoeo_apply_config_file(run, config_path.c_str());
    if (st != CRYOEO_OK) return fail(run, st);
  }
  if (!scenario.empty()) {
    // The command line wins over any [run] scenario in the file.
    const cryoeo_status st = cryoeo_set_scenario(run, scenario.c_str());
    if (st != CRYOEO_OK) return fail(run, st);
  }
  (void)from_preset;

  cryoeo_status st = CRYOEO_OK;
  if (jobs >= 0) {
    st = cryoeo_set_option_int(run, "jobs", jobs);
    if (st != CRYOEO_OK) return fail(run, st);
  }
  if (!out_dir.empty()) {
    st = cryoeo_set_option_str(run, "output_dir", out_dir.c_str());
    if (st != CRYOEO_OK) return fail(run, st);
  }
  if (svg) {
    st = cryoeo_set_option_flag(run, "svg", 1);
    if (st != CRYOEO_OK) return fail(run, st);
  }
  if (dump_mesh) {
    st = cryoeo_set_option_flag(run, "dump_mesh", 1);
    if (st != CRYOEO_OK) return fail(run, st);
  }

  char summary[512];
  st = cryoeo_execute(run, summary, sizeof summary);
  if (st != CRYOEO_OK) return fail(run, st);
  std::printf("%s\n", summary);
  if (list_artifacts) {
    const int n = cryoeo_artifact_count(run);
    for (int k = 0; k < n; ++k) {
      std::printf("  %s\n", cryoeo_artifact_path(run, k));
    }
  }
  cryoeo_run_free(run);
  return 0;
}
