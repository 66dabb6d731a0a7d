#pragma once

#include <string>

namespace cradjoint::tool {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

/// Level from the CR_ADJOINT_LOG environment variable (error|info|debug),
/// defaulting to error. Read once.
LogLevel log_level();

void log_error(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace cradjoint::tool
