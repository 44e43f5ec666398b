#ifndef TSPSURF_CONFIG_HPP
#define TSPSURF_CONFIG_HPP

#include <cstddef>
#include <string>

namespace tspsurf {

/// Defaults loadable from a key=value config file; CLI flags override.
struct Config {
  std::string backend = "auto";
  std::string backend_driver; // path to the solver driver script
  std::string out_dir = "out";
  std::string data_dir = "data";
  std::size_t complex_cap = 200000;
  double time_limit_s = 3600.0;
  int jobs = 1;

  static Config load(const std::string& path);
};

} // namespace tspsurf

#endif
