#pragma once

#include <stdexcept>
#include <string>

namespace cryoeo {

// Error taxonomy shared by the whole library; mirrors the status codes of the
// public C API one-to-one.
enum class ErrorCode {
  Ok = 0,
  InvalidArgument,
  ParseError,
  MeshError,
  NewtonDivergence,
  NonPositiveTemperature,
  EndTimeBeforeStart,
  NotSaturated,
  InvalidDomain,
  EmptyRegion,
  IoError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  // `stage` names the module of origin; it is prefixed to the message so that
  // errors surfacing at the CLI identify where in the pipeline they came from.
  Error(ErrorCode code, const std::string& stage, const std::string& msg)
      : std::runtime_error(stage + ": " + msg), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& stage,
                               const std::string& msg) {
  throw Error(code, stage, msg);
}

}  // namespace cryoeo
