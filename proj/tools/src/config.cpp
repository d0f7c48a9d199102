#include "qlangevin/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

namespace qlangevin::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw std::invalid_argument("expected a finite number, got '" + v + "'");
  }
  return out;
}

std::size_t to_count(const std::string& v) {
  std::size_t out = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("expected a non-negative integer, got '" + v + "'");
  }
  return out;
}

template <typename E>
E to_enum(const std::string& v, const std::map<std::string, E>& names) {
  const auto it = names.find(v);
  if (it == names.end()) {
    std::string allowed;
    for (const auto& [k, _] : names) {
      allowed += (allowed.empty() ? "" : ", ") + k;
    }
    throw std::invalid_argument("expected one of {" + allowed + "}, got '" + v + "'");
  }
  return it->second;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"model",
       [](RunConfig& c, const std::string& v) {
         c.model = to_enum<ModelKind>(v, {{"oscillator", ModelKind::oscillator},
                                          {"well", ModelKind::well}});
       }},
      {"n_levels", [](RunConfig& c, const std::string& v) { c.n_levels = to_count(v); }},
      {"mass", [](RunConfig& c, const std::string& v) { c.mass = to_double(v); }},
      {"omega", [](RunConfig& c, const std::string& v) { c.omega = to_double(v); }},
      {"length", [](RunConfig& c, const std::string& v) { c.length = to_double(v); }},
      {"hbar", [](RunConfig& c, const std::string& v) { c.hbar = to_double(v); }},
      {"kb", [](RunConfig& c, const std::string& v) { c.kb = to_double(v); }},
      {"temperature", [](RunConfig& c, const std::string& v) { c.temperature = to_double(v); }},
      {"beta", [](RunConfig& c, const std::string& v) { c.beta = to_double(v); }},
      {"alpha", [](RunConfig& c, const std::string& v) { c.alpha = to_double(v); }},
      {"variant",
       [](RunConfig& c, const std::string& v) {
         c.variant = to_enum<Variant>(
             v, {{"proposed", Variant::proposed}, {"caldeira_leggett", Variant::caldeira_leggett}});
       }},
      {"f_exponent", [](RunConfig& c, const std::string& v) { c.f_exponent = to_double(v); }},
      {"force", [](RunConfig& c, const std::string& v) { c.force = to_double(v); }},
      {"dt", [](RunConfig& c, const std::string& v) { c.dt = to_double(v); }},
      {"steps", [](RunConfig& c, const std::string& v) { c.steps = to_count(v); }},
      {"record_every", [](RunConfig& c, const std::string& v) { c.record_every = to_count(v); }},
      {"theta_route",
       [](RunConfig& c, const std::string& v) {
         c.theta_route = to_enum<ThetaRoute>(v, {{"energy_basis", ThetaRoute::energy_basis},
                                                 {"lyapunov", ThetaRoute::lyapunov},
                                                 {"quadrature", ThetaRoute::quadrature},
                                                 {"series", ThetaRoute::series}});
       }},
      {"series_order",
       [](RunConfig& c, const std::string& v) {
         c.series_order = static_cast<unsigned>(to_count(v));
       }},
      {"output_path", [](RunConfig& c, const std::string& v) { c.output_path = v; }},
  };
  return table;
}

}  // namespace

std::size_t RunConfig::levels() const {
  if (n_levels != 0) {
    return n_levels;
  }
  return model == ModelKind::well ? 15 : 16;
}

SystemModel RunConfig::build_model() const {
  if (model == ModelKind::well) {
    return build_well(levels(), mass, length, hbar);
  }
  return build_oscillator(levels(), mass, omega, hbar);
}

BathParams RunConfig::build_bath() const {
  return BathParams(temperature, beta, kb, alpha, variant);
}

void validate(const RunConfig& c) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw ConfigError(std::string(name) + " must be positive");
    }
  };
  positive(c.mass, "mass");
  positive(c.hbar, "hbar");
  positive(c.kb, "kb");
  positive(c.temperature, "temperature");
  positive(c.dt, "dt");
  if (c.model == ModelKind::oscillator) {
    positive(c.omega, "omega");
  } else {
    positive(c.length, "length");
  }
  if (!(c.beta >= 0.0)) {
    throw ConfigError("beta must be non-negative");
  }
  if (!(c.alpha > 0.0 && c.alpha <= 1.0)) {
    throw ConfigError("alpha must lie in (0, 1]; alpha = 0 is the Ito interpretation, "
                      "which cancels the noise and is excluded");
  }
  if (c.levels() < 2) {
    throw ConfigError("n_levels must be at least 2");
  }
  if (c.steps < 1) {
    throw ConfigError("steps must be at least 1");
  }
  if (c.record_every < 1) {
    throw ConfigError("record_every must be at least 1");
  }
  if (c.series_order > kMaxSeriesOrder) {
    throw ConfigError("series_order must not exceed " + std::to_string(kMaxSeriesOrder));
  }
  if (c.output_path.empty()) {
    throw ConfigError("output_path must not be empty");
  }
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(where + "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(where + "key '" + key + "' given twice");
    }
    if (value.empty()) {
      throw ConfigError(where + "missing value for '" + key + "'");
    }
    try {
      it->second(cfg, value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + key + ": " + e.what());
    }
  }
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace qlangevin::cli
