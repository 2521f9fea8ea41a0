#include "cryoeo.h"

#include <cstring>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "runner.hpp"

struct cryoeo_run {
  cryoeo::RunConfig cfg;
  std::vector<std::string> artifacts;
  std::string last_error;
};

namespace {

thread_local std::string g_last_error;

cryoeo_status map_code(cryoeo::ErrorCode code) {
  using cryoeo::ErrorCode;
  switch (code) {
    case ErrorCode::Ok:
      return CRYOEO_OK;
    case ErrorCode::InvalidArgument:
      return CRYOEO_INVALID_ARGUMENT;
    case ErrorCode::ParseError:
      return CRYOEO_PARSE_ERROR;
    case ErrorCode::MeshError:
      return CRYOEO_MESH_ERROR;
    case ErrorCode::NewtonDivergence:
      return CRYOEO_NEWTON_DIVERGENCE;
    case ErrorCode::NonPositiveTemperature:
      return CRYOEO_NON_POSITIVE_TEMPERATURE;
    case ErrorCode::EndTimeBeforeStart:
      return CRYOEO_END_TIME_BEFORE_START;
    case ErrorCode::NotSaturated:
      return CRYOEO_NOT_SATURATED;
    case ErrorCode::InvalidDomain:
      return CRYOEO_INVALID_DOMAIN;
    case ErrorCode::EmptyRegion:
      return CRYOEO_EMPTY_REGION;
    case ErrorCode::IoError:
      return CRYOEO_IO_ERROR;
    case ErrorCode::Internal:
      return CRYOEO_INTERNAL;
  }
  return CRYOEO_INTERNAL;
}

void record_error(cryoeo_run* run, const std::string& msg) {
  if (run) {
    run->last_error = msg;
  } else {
    g_last_error = msg;
  }
}

template <typename Fn>
cryoeo_status guarded(cryoeo_run* run, Fn&& fn) {
  try {
    fn();
    if (run) run->last_error.clear();
    return CRYOEO_OK;
  } catch (const cryoeo::Error& e) {
    record_error(run, e.what());
    return map_code(e.code());
  } catch (const std::exception& e) {
    record_error(run, std::string("internal: ") + e.what());
    return CRYOEO_INTERNAL;
  } catch (...) {
    record_error(run, "internal: unknown exception");
    return CRYOEO_INTERNAL;
  }
}

template <typename Fn>
cryoeo_status create_run(cryoeo_run_t* out, Fn&& fill) {
  if (!out) {
    g_last_error = "output handle pointer is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  *out = nullptr;
  auto* run = new (std::nothrow) cryoeo_run;
  if (!run) {
    g_last_error = "out of memory";
    return CRYOEO_INTERNAL;
  }
  const cryoeo_status st = guarded(run, [&] { fill(*run); });
  if (st != CRYOEO_OK) {
    g_last_error = run->last_error;
    delete run;
    return st;
  }
  *out = run;
  return CRYOEO_OK;
}

cryoeo_status need(cryoeo_run_t run, const char* arg, const char* what) {
  if (!run) {
    g_last_error = "run handle is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  if (!arg) {
    run->last_error = std::string(what) + " is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return CRYOEO_OK;
}

}  // namespace

extern "C" {

cryoeo_status cryoeo_config_parse(const char* text, cryoeo_run_t* out) {
  if (!text) {
    g_last_error = "configuration text is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return create_run(out, [&](cryoeo_run& run) {
    run.cfg = cryoeo::parse_config(text);
  });
}

cryoeo_status cryoeo_config_parse_file(const char* path, cryoeo_run_t* out) {
  if (!path) {
    g_last_error = "configuration path is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return create_run(out, [&](cryoeo_run& run) {
    run.cfg = cryoeo::parse_config_file(path);
  });
}

cryoeo_status cryoeo_preset(const char* name, cryoeo_run_t* out) {
  if (!name) {
    g_last_error = "preset name is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return create_run(out, [&](cryoeo_run& run) {
    run.cfg = cryoeo::preset_config(name);
  });
}

cryoeo_status cryoeo_apply_config_file(cryoeo_run_t run, const char* path) {
  const cryoeo_status pre = need(run, path, "configuration path");
  if (pre != CRYOEO_OK) return pre;
  return guarded(run, [&] { cryoeo::apply_config_file(run->cfg, path); });
}

cryoeo_status cryoeo_set_scenario(cryoeo_run_t run, const char* scenario) {
  const cryoeo_status pre = need(run, scenario, "scenario");
  if (pre != CRYOEO_OK) return pre;
  return guarded(run, [&] { run->cfg.scenario = scenario; });
}

cryoeo_status cryoeo_set_option_int(cryoeo_run_t run, const char* name,
                                    int value) {
  const cryoeo_status pre = need(run, name, "option name");
  if (pre != CRYOEO_OK) return pre;
  return guarded(run, [&] {
    if (std::strcmp(name, "jobs") == 0) {
      if (value < 0) {
        cryoeo::raise(cryoeo::ErrorCode::InvalidArgument, "api",
                      "jobs must be non-negative");
      }
      run->cfg.jobs = value;
    } else {
      cryoeo::raise(cryoeo::ErrorCode::InvalidArgument, "api",
                    std::string("unknown integer option \"") + name + "\"");
    }
  });
}

cryoeo_status cryoeo_set_option_str(cryoeo_run_t run, const char* name,
                                    const char* value) {
  const cryoeo_status pre = need(run, name, "option name");
  if (pre != CRYOEO_OK) return pre;
  if (!value) {
    run->last_error = "option value is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return guarded(run, [&] {
    if (std::strcmp(name, "output_dir") == 0) {
      run->cfg.output_dir = value;
    } else {
      cryoeo::raise(cryoeo::ErrorCode::InvalidArgument, "api",
                    std::string("unknown string option \"") + name + "\"");
    }
  });
}

cryoeo_status cryoeo_set_option_flag(cryoeo_run_t run, const char* name,
                                     int value) {
  const cryoeo_status pre = need(run, name, "option name");
  if (pre != CRYOEO_OK) return pre;
  return guarded(run, [&] {
    if (std::strcmp(name, "svg") == 0) {
      run->cfg.svg = value != 0;
    } else if (std::strcmp(name, "dump_mesh") == 0) {
      run->cfg.dump_mesh = value != 0;
    } else {
      cryoeo::raise(cryoeo::ErrorCode::InvalidArgument, "api",
                    std::string("unknown flag \"") + name + "\"");
    }
  });
}

cryoeo_status cryoeo_execute(cryoeo_run_t run, char* summary_buf,
                             size_t buflen) {
  if (!run) {
    g_last_error = "run handle is NULL";
    return CRYOEO_INVALID_ARGUMENT;
  }
  return guarded(run, [&] {
    const cryoeo::RunResult result = cryoeo::run(run->cfg);
    run->artifacts = result.artifacts;
    if (summary_buf && buflen > 0) {
      std::strncpy(summary_buf, result.summary.c_str(), buflen - 1);
      summary_buf[buflen - 1] = '\0';
    }
  });
}

int cryoeo_artifact_count(cryoeo_run_t run) {
  return run ? static_cast<int>(run->artifacts.size()) : 0;
}

const char* cryoeo_artifact_path(cryoeo_run_t run, int index) {
  if (!run || index < 0 ||
      index >= static_cast<int>(run->artifacts.size())) {
    return nullptr;
  }
  return run->artifacts[static_cast<std::size_t>(index)].c_str();
}

const char* cryoeo_last_error(cryoeo_run_t run) {
  return run ? run->last_error.c_str() : g_last_error.c_str();
}

const char* cryoeo_status_message(cryoeo_status status) {
  switch (status) {
    case CRYOEO_OK:
      return "ok";
    case CRYOEO_INVALID_ARGUMENT:
      return "invalid argument";
    case CRYOEO_PARSE_ERROR:
      return "configuration parse error";
    case CRYOEO_MESH_ERROR:
      return "mesh construction error";
    case CRYOEO_NEWTON_DIVERGENCE:
      return "nonlinear solve diverged";
    case CRYOEO_NON_POSITIVE_TEMPERATURE:
      return "non-positive temperature";
    case CRYOEO_END_TIME_BEFORE_START:
      return "end time not after start";
    case CRYOEO_NOT_SATURATED:
      return "history not saturated";
    case CRYOEO_INVALID_DOMAIN:
      return "outside the model validity domain";
    case CRYOEO_EMPTY_REGION:
      return "requested region contains no cells";
    case CRYOEO_IO_ERROR:
      return "file I/O error";
    case CRYOEO_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* cryoeo_version(void) { return "1.0.0"; }

void cryoeo_run_free(cryoeo_run_t run) { delete run; }

}  // extern "C"
