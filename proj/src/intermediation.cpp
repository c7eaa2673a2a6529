#include "aistress/intermediation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aistress/csv.hpp"

namespace aistress {

double RegulatoryFloors::at(Level l) const {
  switch (l) {
    case Level::Low: return low;
    case Level::Moderate: return moderate;
    case Level::High: return high;
  }
  return high;
}

double SwitchingDamping::at(Level l) const {
  switch (l) {
    case Level::Low: return low;
    case Level::Moderate: return moderate;
    case Level::High: return high;
  }
  return high;
}

double friction(double A, const Calibration& c) {
  return std::max(c.phi_min, c.phi0 * std::exp(-c.gamma_phi * A));
}

double margin(double phi, const Calibration& c) { return c.m0 + c.gamma_m * phi; }

double margin_compression_rate(double A, const Calibration& c) {
  const double unfloored = c.phi0 * std::exp(-c.gamma_phi * A);
  if (unfloored <= c.phi_min) return 0.0;
  return -c.gamma_m * c.gamma_phi * unfloored * c.g_A * A;
}

double revenue_at_risk(double Q, double A, const Calibration& c) {
  return c.gamma_m * (c.phi0 - friction(A, c)) * Q;
}

std::vector<SectorProfile> default_sectors() {
  using L = Level;
  using E = Exposure;
  return {
      {"SaaS (seat)", 300, 0.60, 0.80, L::Moderate, L::Low, E::High},
      {"Card payments", 120, 0.40, 0.60, L::High, L::High, E::Moderate},
      {"Insurance brokerage", 50, 0.40, 0.50, L::Moderate, L::High, E::LowModerate},
      {"Mgmt. consulting", 330, 0.50, 0.70, L::Low, L::Low, E::High},
      {"Financial advisory", 120, 0.30, 0.50, L::Moderate, L::High, E::Moderate},
      {"Legal services", 370, 0.30, 0.50, L::Moderate, L::High, E::LowModerate},
      {"Travel booking", 60, 0.60, 0.80, L::Low, L::Low, E::High},
  };
}

std::vector<SectorReportRow> sector_report(const std::vector<SectorProfile>& sectors,
                                           const RegulatoryFloors& floors,
                                           const SwitchingDamping& damping) {
  if (sectors.empty()) throw std::invalid_argument("sector_report: empty sector list");
  std::vector<SectorReportRow> rows;
  rows.reserve(sectors.size());
  for (const auto& s : sectors) {
    if (!(s.friction_share_low >= 0 && s.friction_share_low <= s.friction_share_high &&
          s.friction_share_high <= 1 && s.revenue_busd > 0))
      throw std::invalid_argument("sector '" + s.name + "': invalid friction range or revenue");
    SectorReportRow r;
    r.name = s.name;
    r.friction_share_mid = 0.5 * (s.friction_share_low + s.friction_share_high);
    r.floor_fraction = floors.at(s.regulatory);
    // Friction margin is γ_m φ₀ per unit volume; falling to the floor removes (1 - floor) of it.
    const double lost_share = r.friction_share_mid * (1.0 - r.floor_fraction);
    r.revenue_at_risk_busd = lost_share * s.revenue_busd;
    r.exposure_score = lost_share * damping.at(s.switching);
    r.net_exposure = s.net_exposure;
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].exposure_score > rows[b].exposure_score;
  });
  for (std::size_t i = 0; i < order.size(); ++i) rows[order[i]].rank = static_cast<int>(i) + 1;
  return rows;
}

const char* to_string(Level l) {
  switch (l) {
    case Level::Low: return "Low";
    case Level::Moderate: return "Moderate";
    case Level::High: return "High";
  }
  return "?";
}

const char* to_string(Exposure e) {
  switch (e) {
    case Exposure::Low: return "Low";
    case Exposure::LowModerate: return "LowModerate";
    case Exposure::Moderate: return "Moderate";
    case Exposure::High: return "High";
  }
  return "?";
}

Level parse_level(const std::string& s) {
  if (s == "Low") return Level::Low;
  if (s == "Moderate") return Level::Moderate;
  if (s == "High") return Level::High;
  throw ConfigError("unknown level '" + s + "' (expected Low, Moderate or High)");
}

Exposure parse_exposure(const std::string& s) {
  if (s == "Low") return Exposure::Low;
  if (s == "LowModerate") return Exposure::LowModerate;
  if (s == "Moderate") return Exposure::Moderate;
  if (s == "High") return Exposure::High;
  throw ConfigError("unknown exposure '" + s + "'");
}

std::vector<SectorProfile> load_sectors(const std::filesystem::path& path) {
  const CsvTable t = read_csv(path, true);
  const char* names[] = {"sector",     "revenue_busd", "friction_share_low", "friction_share_high",
                         "switching",  "regulatory",   "net_exposure"};
  int idx[7];
  for (int i = 0; i < 7; ++i) {
    idx[i] = t.column(names[i]);
    if (idx[i] < 0) throw ConfigError("sector file missing column '" + std::string(names[i]) + "'");
  }
  std::vector<SectorProfile> out;
  int line = 1;
  for (const auto& r : t.rows) {
    ++line;
    if (r.size() < t.header.size()) throw ConfigError("sector file row " + std::to_string(line) + " is short", line);
    out.push_back({r[idx[0]], parse_number(r[idx[1]], line, names[1]),
                   parse_number(r[idx[2]], line, names[2]), parse_number(r[idx[3]], line, names[3]),
                   parse_level(r[idx[4]]), parse_level(r[idx[5]]), parse_exposure(r[idx[6]])});
  }
  return out;
}

std::string sectors_csv(const std::vector<SectorProfile>& sectors) {
  std::string out =
      "sector,revenue_busd,friction_share_low,friction_share_high,switching,regulatory,net_exposure\n";
  for (const auto& s : sectors)
    out += s.name + ',' + fmt_sig(s.revenue_busd) + ',' + fmt_sig(s.friction_share_low) + ',' +
           fmt_sig(s.friction_share_high) + ',' + to_string(s.switching) + ',' +
           to_string(s.regulatory) + ',' + to_string(s.net_exposure) + '\n';
  return out;
}

std::string sector_report_csv(const std::vector<SectorReportRow>& rows) {
  std::string out =
      "rank,sector,friction_share_mid,floor_fraction,revenue_at_risk_busd,exposure_score,net_exposure\n";
  std::vector<const SectorReportRow*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->rank < b->rank; });
  for (const auto* r : sorted)
    out += std::to_string(r->rank) + ',' + r->name + ',' + fmt_sig(r->friction_share_mid) + ',' +
           fmt_sig(r->floor_fraction) + ',' + fmt_sig(r->revenue_at_risk_busd) + ',' +
           fmt_sig(r->exposure_score) + ',' + to_string(r->net_exposure) + '\n';
  return out;
}

}  // namespace aistress
