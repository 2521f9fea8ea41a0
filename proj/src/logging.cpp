#include "logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace cryoeo::log {

namespace {

Level parse_env() {
  const char* v = std::getenv("CRYO_EO_SIM_LOG");
  if (!v) return Level::Warn;
  if (std::strcmp(v, "silent") == 0) return Level::Silent;
  if (std::strcmp(v, "error") == 0) return Level::Error;
  if (std::strcmp(v, "warn") == 0) return Level::Warn;
  if (std::strcmp(v, "info") == 0) return Level::Info;
  if (std::strcmp(v, "debug") == 0) return Level::Debug;
  return Level::Warn;
}

std::mutex& io_mutex() {
  static std::mutex m;
  return m;
}

void emit(Level at, const char* tag, const std::string& msg) {
  if (level() < at) return;
  std::lock_guard<std::mutex> lock(io_mutex());
  std::fprintf(stderr, "[cryo-eo-sim] %s: %s\n", tag, msg.c_str());
}

}  // namespace

Level level() {
  static const Level lv = parse_env();
  return lv;
}

void error(const std::string& msg) { emit(Level::Error, "error", msg); }
void warn(const std::string& msg) { emit(Level::Warn, "warning", msg); }
void info(const std::string& msg) { emit(Level::Info, "info", msg); }
void debug(const std::string& msg) { emit(Level::Debug, "debug", msg); }

void error(const std::string& where, const std::string& msg) {
  emit(Level::Error, "error", where + ": " + msg);
}
void warn(const std::string& where, const std::string& msg) {
  emit(Level::Warn, "warning", where + ": " + msg);
}
void info(const std::string& where, const std::string& msg) {
  emit(Level::Info, "info", where + ": " + msg);
}
void debug(const std::string& where, const std::string& msg) {
  emit(Level::Debug, "debug", where + ": " + msg);
}

}  // namespace cryoeo::log
