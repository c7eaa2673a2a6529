#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aistress {

/// Full calibration vector. Every equation reads its constants from here.
struct Calibration {
  // labor market
  double s_L0 = 0.56;
  double mpc_labor = 0.85;
  double mpc_capital = 1.0 - 0.85;
  double chi_top = 0.59;

  // AI dynamics
  double g_A = 0.05;
  double g_c = 0.30;
  double d_bar = 0.80;
  double kappa = 2.0;
  double t0_diffusion = 2.8;
  double rho0 = 0.002;
  double eta = 0.003;
  double alpha_rho = 0.50;
  double beta_feedback = 0.30;
  double f_slope = 0.15;
  double A0 = 1.0;
  double s_floor = 0.01;  // collapse sentinel

  // money
  double V_obs = 1.41;

  // intermediation
  double m0 = 0.02;
  double gamma_m = 0.5;
  double phi0 = 1.0;
  double gamma_phi = 0.5;
  double phi_min = 0.1;

  // credit
  double sigma_r = 0.20;

  // task ceiling
  double sbar = 0.60;
  double sbar_eff = 0.80 * 0.60;  // d_bar * sbar

  // CES elasticity; carried for completeness, not read by the reduced-form dynamics.
  double sigma_ces = 1.0;

  bool operator==(const Calibration&) const = default;
};

struct PolicySpec {
  double tau = 0.0;         // transfer as a fraction of output
  double lag = 0.0;         // years
  double start_time = 0.0;  // years

  bool operator==(const PolicySpec&) const = default;
};

struct Scenario {
  std::string name;
  std::optional<double> g_A_override;
  double horizon = 10.0;
  double dt = 0.01;
  PolicySpec policy;
  std::optional<std::string> quintiles;  // path to a quintile CSV

  bool operator==(const Scenario&) const = default;
};

/// Largest admissible integration step, in years.
inline constexpr double kMaxStep = 0.05;

struct Violation {
  std::string field;
  std::string message;
};

/// Thrown by config loading. `line` is 0 for validation failures.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Calibration default_calibration();

std::vector<Violation> validate(const Calibration& c);
std::vector<Violation> validate(const Scenario& s);

/// Calibration with the scenario's g_A override applied.
Calibration effective_calibration(const Calibration& c, const Scenario& s);

struct Config {
  Calibration calibration;
  std::vector<Scenario> scenarios;

  const Scenario* find(const std::string& name) const;
};

Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

/// Writes every calibration field plus scenario blocks; parse_config reads it back exactly.
std::string serialize(const Config& cfg);

/// Names of the calibration keys, in serialization order.
const std::vector<std::string>& calibration_keys();

/// Generic flat key-value document shared by the config and rule-set readers.
struct KeyValueSection {
  std::string header;  // text inside [...]; empty for the top-level section
  int line = 0;
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<int> entry_lines;
};

std::vector<KeyValueSection> parse_key_value(const std::string& text);

double parse_number(const std::string& text, int line, const std::string& key);
std::string format_number(double v);

}  // namespace aistress
