#pragma once

#include <string>

namespace dint {

enum class LogLevel { Off, Info, Trace };

/// Level parsed once from the DINTERVAL_LOG environment variable
/// (off | info | trace; default off).
LogLevel log_level();

/// Writes msg to stderr when log_level() >= lvl.
void log_line(LogLevel lvl, const std::string& msg);

}  // namespace dint
