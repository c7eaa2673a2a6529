#include "aistress/params.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aistress/csv.hpp"

namespace aistress {
namespace {

struct Field {
  const char* key;
  double Calibration::*member;
};

// Serialization order; also the set of accepted top-level keys.
constexpr Field kFields[] = {
    {"s_L0", &Calibration::s_L0},
    {"mpc_labor", &Calibration::mpc_labor},
    {"mpc_capital", &Calibration::mpc_capital},
    {"chi_top", &Calibration::chi_top},
    {"g_A", &Calibration::g_A},
    {"g_c", &Calibration::g_c},
    {"d_bar", &Calibration::d_bar},
    {"kappa", &Calibration::kappa},
    {"t0_diffusion", &Calibration::t0_diffusion},
    {"rho0", &Calibration::rho0},
    {"eta", &Calibration::eta},
    {"alpha_rho", &Calibration::alpha_rho},
    {"beta_feedback", &Calibration::beta_feedback},
    {"f_slope", &Calibration::f_slope},
    {"A0", &Calibration::A0},
    {"s_floor", &Calibration::s_floor},
    {"V_obs", &Calibration::V_obs},
    {"m0", &Calibration::m0},
    {"gamma_m", &Calibration::gamma_m},
    {"phi0", &Calibration::phi0},
    {"gamma_phi", &Calibration::gamma_phi},
    {"phi_min", &Calibration::phi_min},
    {"sigma_r", &Calibration::sigma_r},
    {"sbar", &Calibration::sbar},
    {"sbar_eff", &Calibration::sbar_eff},
    {"sigma_ces", &Calibration::sigma_ces},
};

const Field* find_field(const std::string& key) {
  for (const auto& f : kFields)
    if (key == f.key) return &f;
  return nullptr;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check(std::vector<Violation>& out, bool ok, const char* field, std::string msg) {
  if (!ok) out.push_back({field, std::move(msg)});
}

std::string join(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

}  // namespace

Calibration default_calibration() { return Calibration{}; }

std::vector<Violation> validate(const Calibration& c) {
  std::vector<Violation> v;
  check(v, c.s_L0 > 0 && c.s_L0 < 1, "s_L0", "s_L0 ∈ (0,1)");
  if (!(c.mpc_labor > 0.5))
    v.push_back({"mpc_labor", "mpc_labor must exceed 0.5"});
  else if (!(c.mpc_labor < 1))
    v.push_back({"mpc_labor", "mpc_labor must be below 1"});
  check(v, std::abs(c.mpc_labor + c.mpc_capital - 1.0) <= 1e-15, "mpc_capital",
        "mpc_labor + mpc_capital = 1");
  check(v, c.chi_top >= 0 && c.chi_top <= 1, "chi_top", "chi_top ∈ [0,1]");
  check(v, std::isfinite(c.g_A) && c.g_A >= 0, "g_A", "g_A ≥ 0");
  check(v, std::isfinite(c.g_c) && c.g_c >= 0, "g_c", "g_c ≥ 0");
  check(v, c.d_bar > 0 && c.d_bar <= 1, "d_bar", "d_bar ∈ (0,1]");
  check(v, c.kappa > 0 && std::isfinite(c.kappa), "kappa", "kappa > 0");
  check(v, std::isfinite(c.t0_diffusion), "t0_diffusion", "t0_diffusion finite");
  check(v, c.rho0 >= 0, "rho0", "rho0 ≥ 0");
  check(v, c.eta >= 0, "eta", "eta ≥ 0");
  check(v, c.alpha_rho > 0, "alpha_rho", "alpha_rho > 0");
  check(v, c.alpha_rho < 1, "alpha_rho", "alpha_rho < 1");
  check(v, c.beta_feedback > 0, "beta_feedback", "beta_feedback > 0");
  check(v, c.f_slope > 0, "f_slope", "f_slope > 0");
  check(v, c.A0 > 0 && std::isfinite(c.A0), "A0", "A0 > 0");
  check(v, c.s_floor >= 0 && c.s_floor < c.s_L0, "s_floor", "s_floor ∈ [0, s_L0)");
  check(v, c.V_obs > 0, "V_obs", "V_obs > 0");
  check(v, c.m0 >= 0, "m0", "m0 ≥ 0");
  check(v, c.gamma_m >= 0, "gamma_m", "gamma_m ≥ 0");
  check(v, c.phi0 >= 0, "phi0", "phi0 ≥ 0");
  check(v, c.gamma_phi >= 0, "gamma_phi", "gamma_phi ≥ 0");
  check(v, c.phi_min >= 0, "phi_min", "phi_min ≥ 0");
  check(v, c.phi_min <= c.phi0, "phi_min", "phi_min ≤ phi0");
  check(v, c.sigma_r > 0, "sigma_r", "sigma_r > 0");
  check(v, c.sbar >= 0 && c.sbar <= 1, "sbar", "sbar ∈ [0,1]");
  check(v, std::abs(c.sbar_eff - c.d_bar * c.sbar) <= 1e-12, "sbar_eff",
        "sbar_eff = d_bar · sbar");
  return v;
}

std::vector<Violation> validate(const Scenario& s) {
  std::vector<Violation> v;
  check(v, s.horizon > 0 && std::isfinite(s.horizon), "horizon", "horizon > 0");
  check(v, s.dt > 0, "dt", "dt > 0");
  check(v, s.dt <= s.horizon, "dt", "dt ≤ horizon");
  check(v, s.dt <= kMaxStep, "dt", "dt ≤ 0.05 (stability guard)");
  if (s.g_A_override)
    check(v, std::isfinite(*s.g_A_override) && *s.g_A_override >= 0, "g_A_override",
          "g_A_override ≥ 0");
  check(v, s.policy.tau >= 0, "tau", "tau ≥ 0");
  check(v, s.policy.lag >= 0, "lag", "lag ≥ 0");
  check(v, s.policy.start_time >= 0, "start_time", "start_time ≥ 0");
  return v;
}

Calibration effective_calibration(const Calibration& c, const Scenario& s) {
  Calibration out = c;
  if (s.g_A_override) out.g_A = *s.g_A_override;
  return out;
}

const Scenario* Config::find(const std::string& name) const {
  for (const auto& s : scenarios)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<KeyValueSection> parse_key_value(const std::string& text) {
  std::vector<KeyValueSection> sections(1);
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header", lineno);
      KeyValueSection sec;
      sec.header = trim(line.substr(1, line.size() - 2));
      sec.line = lineno;
      sections.push_back(std::move(sec));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'", lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value", lineno);
    sections.back().entries.emplace_back(std::move(key), std::move(value));
    sections.back().entry_lines.push_back(lineno);
  }
  return sections;
}

double parse_number(const std::string& text, int line, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v))
    throw ConfigError("line " + std::to_string(line) + ": '" + key + "' expects a number, got '" +
                          text + "'",
                      line);
  return v;
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Config parse_config(const std::string& text) {
  Config cfg;
  const auto sections = parse_key_value(text);

  bool saw_mpc_capital = false;
  bool saw_sbar_eff = false;
  for (std::size_t i = 0; i < sections[0].entries.size(); ++i) {
    const auto& [key, value] = sections[0].entries[i];
    const int line = sections[0].entry_lines[i];
    const Field* f = find_field(key);
    if (!f) throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'", line);
    cfg.calibration.*(f->member) = parse_number(value, line, key);
    saw_mpc_capital |= key == "mpc_capital";
    saw_sbar_eff |= key == "sbar_eff";
  }
  // Derived fields follow their sources unless pinned explicitly.
  if (!saw_mpc_capital) cfg.calibration.mpc_capital = 1.0 - cfg.calibration.mpc_labor;
  if (!saw_sbar_eff) cfg.calibration.sbar_eff = cfg.calibration.d_bar * cfg.calibration.sbar;

  for (std::size_t si = 1; si < sections.size(); ++si) {
    const auto& sec = sections[si];
    const std::string prefix = "scenario.";
    if (sec.header.rfind(prefix, 0) != 0 || sec.header.size() == prefix.size())
      throw ConfigError("line " + std::to_string(sec.line) + ": unknown section '[" + sec.header +
                            "]'",
                        sec.line);
    Scenario s;
    s.name = sec.header.substr(prefix.size());
    if (cfg.find(s.name))
      throw ConfigError("line " + std::to_string(sec.line) + ": duplicate scenario '" + s.name + "'",
                        sec.line);
    for (std::size_t i = 0; i < sec.entries.size(); ++i) {
      const auto& [key, value] = sec.entries[i];
      const int line = sec.entry_lines[i];
      if (key == "g_A_override") s.g_A_override = parse_number(value, line, key);
      else if (key == "horizon") s.horizon = parse_number(value, line, key);
      else if (key == "dt") s.dt = parse_number(value, line, key);
      else if (key == "tau") s.policy.tau = parse_number(value, line, key);
      else if (key == "lag") s.policy.lag = parse_number(value, line, key);
      else if (key == "start_time") s.policy.start_time = parse_number(value, line, key);
      else if (key == "quintiles") s.quintiles = value;
      else
        throw ConfigError(
            "line " + std::to_string(line) + ": unknown scenario key '" + key + "'", line);
    }
    if (auto vs = validate(s); !vs.empty())
      throw ConfigError("scenario '" + s.name + "': " + join(vs));
    cfg.scenarios.push_back(std::move(s));
  }

  if (auto vs = validate(cfg.calibration); !vs.empty()) throw ConfigError(join(vs));
  return cfg;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const Config& cfg) {
  std::string out;
  for (const auto& f : kFields)
    out += std::string(f.key) + " = " + format_number(cfg.calibration.*(f.member)) + "\n";
  for (const auto& s : cfg.scenarios) {
    out += "\n[scenario." + s.name + "]\n";
    if (s.g_A_override) out += "g_A_override = " + format_number(*s.g_A_override) + "\n";
    out += "horizon = " + format_number(s.horizon) + "\n";
    out += "dt = " + format_number(s.dt) + "\n";
    out += "tau = " + format_number(s.policy.tau) + "\n";
    out += "lag = " + format_number(s.policy.lag) + "\n";
    out += "start_time = " + format_number(s.policy.start_time) + "\n";
    if (s.quintiles) out += "quintiles = " + *s.quintiles + "\n";
  }
  return out;
}

const std::vector<std::string>& calibration_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& f : kFields) k.emplace_back(f.key);
    return k;
  }();
  return keys;
}

}  // namespace aistress
