#pragma once

#include <string>

namespace cryoeo::log {

// Verbosity is read once from the CRYO_EO_SIM_LOG environment variable:
// silent | error | warn | info | debug (default: warn).
enum class Level { Silent = 0, Error, Warn, Info, Debug };

Level level();

void error(const std::string& msg);
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

// Same, prefixed with the emitting component.
void error(const std::string& where, const std::string& msg);
void warn(const std::string& where, const std::string& msg);
void info(const std::string& where, const std::string& msg);
void debug(const std::string& where, const std::string& msg);

}  // namespace cryoeo::log
