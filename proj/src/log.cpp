#include "dint/log.hpp"

#include <cstdlib>
#include <iostream>

namespace dint {

LogLevel log_level() {
  static LogLevel level = [] {
    const char* raw = std::getenv("DINTERVAL_LOG");
    if (!raw) return LogLevel::Off;
    std::string s(raw);
    if (s == "info") return LogLevel::Info;
    if (s == "trace") return LogLevel::Trace;
    return LogLevel::Off;
  }();
  return level;
}

void log_line(LogLevel lvl, const std::string& msg) {
  if (log_level() >= lvl) std::cerr << msg << '\n';
}

}  // namespace dint
