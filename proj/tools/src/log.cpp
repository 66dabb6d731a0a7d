#include "log.hpp"

#include <cstdlib>
#include <iostream>

namespace cradjoint::tool {

namespace {

LogLevel parse_level() {
  const char* env = std::getenv("CR_ADJOINT_LOG");
  if (env == nullptr) return LogLevel::Error;
  const std::string value(env);
  if (value == "debug") return LogLevel::Debug;
  if (value == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void emit(const char* tag, const std::string& message) {
  std::cerr << "cradjoint: " << tag << ": " << message << "\n";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_error(const std::string& message) { emit("error", message); }

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) emit("info", message);
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::Debug) emit("debug", message);
}

}  // namespace cradjoint::tool
