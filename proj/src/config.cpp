#include "tspsurf/config.hpp"

#include <fstream>

#include "tspsurf/errors.hpp"

namespace tspsurf {

Config Config::load(const std::string& path) {
  Config cfg;
  std::ifstream f(path);
  if (!f) throw TspError(ErrorCode::IoError, "cannot open config " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw TspError(ErrorCode::MalformedSection,
                     "config line " + std::to_string(lineno) +
                         " is not key=value");
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "backend")
      cfg.backend = value;
    else if (key == "backend_driver")
      cfg.backend_driver = value;
    else if (key == "out_dir")
      cfg.out_dir = value;
    else if (key == "data_dir")
      cfg.data_dir = value;
    else if (key == "complex_cap")
      cfg.complex_cap = std::stoul(value);
    else if (key == "time_limit")
      cfg.time_limit_s = std::stod(value);
    else if (key == "jobs")
      cfg.jobs = std::stoi(value);
    else
      throw TspError(ErrorCode::MalformedSection, "unknown config key " + key);
  }
  return cfg;
}

} // namespace tspsurf
