#include "greedykit/config.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "greedykit/report.hpp"

namespace greedykit {
namespace {

std::string trim(const std::string& text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) {
    ++first;
  }
  while (last > first &&
         std::isspace(static_cast<unsigned char>(text[last - 1]))) {
    --last;
  }
  return text.substr(first, last - first);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " +
                              message);
}

}  // namespace

Config parse_config(const std::string& text) {
  Config config;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) {
      raw.erase(hash);
    }
    const std::string stripped = trim(raw);
    if (stripped.empty()) {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      fail(line, "expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      fail(line, "missing key before '='");
    }
    if (value.empty()) {
      fail(line, "missing value for '" + key + "'");
    }
    config[key] = ConfigEntry{value, line};
  }
  return config;
}

Config load_config_file(const std::string& path) {
  return parse_config(read_text_file(path));
}

double config_real(const Config& config, const std::string& key,
                   double fallback) {
  const auto it = config.find(key);
  if (it == config.end()) {
    return fallback;
  }
  try {
    std::size_t used = 0;
    const double value = std::stod(it->second.value, &used);
    if (used != it->second.value.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    fail(it->second.line,
         "value for '" + key + "' is not a number: '" + it->second.value + "'");
  }
}

int config_int(const Config& config, const std::string& key, int fallback) {
  const auto it = config.find(key);
  if (it == config.end()) {
    return fallback;
  }
  try {
    std::size_t used = 0;
    const int value = std::stoi(it->second.value, &used);
    if (used != it->second.value.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return value;
  } catch (const std::exception&) {
    fail(it->second.line, "value for '" + key + "' is not an integer: '" +
                              it->second.value + "'");
  }
}

std::string config_string(const Config& config, const std::string& key,
                          const std::string& fallback) {
  const auto it = config.find(key);
  return it == config.end() ? fallback : it->second.value;
}

}  // namespace greedykit
