#pragma once

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace hamres::log {

enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

// Verbosity comes from the HAMRES_LOG environment variable
// (quiet|warn|info|debug or 0..3). Default: warn.
inline Level level() {
  static const Level cached = [] {
    const char* env = std::getenv("HAMRES_LOG");
    if (env == nullptr) return Level::Warn;
    std::string_view v(env);
    if (v == "0" || v == "quiet") return Level::Quiet;
    if (v == "1" || v == "warn") return Level::Warn;
    if (v == "2" || v == "info") return Level::Info;
    if (v == "3" || v == "debug") return Level::Debug;
    return Level::Warn;
  }();
  return cached;
}

inline void warn(std::string_view msg) {
  if (level() >= Level::Warn) std::cerr << "[hamres] warning: " << msg << '\n';
}

inline void info(std::string_view msg) {
  if (level() >= Level::Info) std::cerr << "[hamres] " << msg << '\n';
}

inline void debug(std::string_view msg) {
  if (level() >= Level::Debug) std::cerr << "[hamres] debug: " << msg << '\n';
}

}  // namespace hamres::log
