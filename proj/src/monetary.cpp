#include "aistress/monetary.hpp"

#include <cmath>
#include <stdexcept>

#include "aistress/csv.hpp"

namespace aistress {

QuintileProfile default_quintiles() {
  QuintileProfile p;
  const double shares[5] = {0.08, 0.10, 0.11, 0.12, 0.59};
  const double exposures[5] = {0.05, 0.08, 0.10, 0.12, 0.60};
  for (int i = 0; i < 5; ++i) p.q[i] = {shares[i], 0.85, exposures[i]};
  return p;
}

std::vector<Violation> validate(const QuintileProfile& p) {
  std::vector<Violation> v;
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto& e = p.q[i];
    sum += e.consumption_share;
    const auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in01(e.consumption_share) || !in01(e.mpc) || !in01(e.exposure))
      v.push_back({"quintile" + std::to_string(i + 1), "quintile fields must lie in [0,1]"});
  }
  if (std::abs(sum - 1.0) > 1e-9)
    v.push_back({"consumption_share", "quintile consumption shares must sum to 1"});
  return v;
}

QuintileProfile load_quintiles(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path, /*has_header=*/false);
  std::vector<const std::vector<std::string>*> rows;
  for (const auto& r : table.rows) {
    // header rows are non-numeric in the first cell
    if (!r.empty() && !is_number(r[0])) continue;
    rows.push_back(&r);
  }
  if (rows.size() != 5)
    throw ConfigError("quintile file '" + path.string() + "' must have 5 data rows, found " +
                      std::to_string(rows.size()));
  QuintileProfile p;
  for (int i = 0; i < 5; ++i) {
    const auto& r = *rows[i];
    if (r.size() != 3)
      throw ConfigError("quintile row " + std::to_string(i + 1) + " needs share,mpc,exposure");
    p.q[i] = {parse_number(r[0], i + 1, "share"), parse_number(r[1], i + 1, "mpc"),
              parse_number(r[2], i + 1, "exposure")};
  }
  if (auto vs = validate(p); !vs.empty()) throw ConfigError(vs.front().message);
  return p;
}

double consumption_ratio(double s_L, const Calibration& c) {
  return c.mpc_labor * s_L + (1.0 - c.mpc_labor) * (1.0 - s_L);
}

double velocity_scale(const Calibration& c) { return c.V_obs / consumption_ratio(c.s_L0, c); }

double velocity(double s_L, double tau, const Calibration& c) {
  // ratio first, so that velocity(s_L0, 0) is V_obs to the last bit
  return c.V_obs * ((consumption_ratio(s_L, c) + tau) / consumption_ratio(c.s_L0, c));
}

double velocity_decline_rate(double s_L, double ds_L, const Calibration& c) {
  const double gap = 2.0 * c.mpc_labor - 1.0;
  return gap * ds_L / (s_L * gap + (1.0 - c.mpc_labor));
}

GhostReading ghost_gdp(double gY, double gW) { return {gY, gW, gY - gW}; }

ConsumptionShock consumption_shock(const QuintileProfile& p, double shock) {
  if (!(shock >= 0.0 && shock <= 1.0))
    throw std::invalid_argument("consumption_shock: shock must lie in [0,1]");
  ConsumptionShock out{0.0, {}};
  for (int i = 0; i < 5; ++i) {
    const double pp = 100.0 * p.q[i].consumption_share * shock * p.q[i].exposure;
    out.per_quintile_pp[i] = pp;
    out.total_pp += pp;
  }
  return out;
}

double amplifier_lower_bound(double chi, double delta5) { return chi * delta5; }

}  // namespace aistress
