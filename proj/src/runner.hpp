#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace cryoeo {

// Outcome of a completed run: a one-line human summary plus every file
// that was written.
struct RunResult {
  std::string summary;
  std::vector<std::string> artifacts;
};

// Execute the scenario or figure preset named in cfg.scenario, writing
// artifacts under cfg.output_dir.  Throws Error with a stage-labelled
// message on any failure.
[[nodiscard]] RunResult run(const RunConfig& cfg);

}  // namespace cryoeo
