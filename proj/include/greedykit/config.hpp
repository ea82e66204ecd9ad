#pragma once

#include <map>
#include <string>

namespace greedykit {

/// One `key = value` assignment with its 1-based source line.
struct ConfigEntry {
  std::string value;
  int line = 0;
};

using Config = std::map<std::string, ConfigEntry>;

/// Parses `key = value` lines; '#' starts a comment, blank lines are
/// ignored, later assignments to a key win.  Throws std::invalid_argument
/// with a "config line N:" message on malformed lines.
Config parse_config(const std::string& text);

Config load_config_file(const std::string& path);

/// Typed accessors; throw std::invalid_argument with the line number when
/// the value does not parse.
double config_real(const Config& config, const std::string& key,
                   double fallback);
int config_int(const Config& config, const std::string& key, int fallback);
std::string config_string(const Config& config, const std::string& key,
                          const std::string& fallback);

}  // namespace greedykit
