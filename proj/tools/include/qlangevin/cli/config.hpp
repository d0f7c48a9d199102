#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "qlangevin/friction.hpp"
#include "qlangevin/models.hpp"

namespace qlangevin::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ModelKind model = ModelKind::oscillator;
  std::size_t n_levels = 0;  // 0: 16 for the oscillator, 15 for the well
  double mass = 1.0;
  double omega = 1.0;
  double length = 1.0;
  double hbar = 1.0;
  double kb = 1.0;
  double temperature = 1.0;
  double beta = 0.3;
  double alpha = 0.5;
  Variant variant = Variant::proposed;
  double f_exponent = 1.0;
  double force = 0.0;
  double dt = 0.01;
  std::size_t steps = 1000;
  std::size_t record_every = 1;
  ThetaRoute theta_route = ThetaRoute::energy_basis;
  unsigned series_order = 6;
  std::string output_path = "run.csv";

  std::size_t levels() const;
  SystemModel build_model() const;
  BathParams build_bath() const;
};

/// `key = value` lines, `#` starts a comment. Unknown or repeated keys and
/// malformed values throw ConfigError naming the line.
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Range checks that do not depend on parsing.
void validate(const RunConfig& cfg);

}  // namespace qlangevin::cli
