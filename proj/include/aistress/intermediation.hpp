#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aistress/params.hpp"

namespace aistress {

enum class Level { Low, Moderate, High };
enum class Exposure { Low, LowModerate, Moderate, High };

struct SectorProfile {
  std::string name;
  double revenue_busd;
  double friction_share_low;
  double friction_share_high;
  Level switching;
  Level regulatory;
  Exposure net_exposure;
};

/// Friction floor retained under each regulatory barrier, as a fraction of φ₀.
struct RegulatoryFloors {
  double low = 0.0;
  double moderate = 0.25;
  double high = 0.5;

  double at(Level l) const;
};

/// Pass-through of friction loss into margin loss by switching cost.
struct SwitchingDamping {
  double low = 1.0;
  double moderate = 0.85;
  double high = 0.7;

  double at(Level l) const;
};

struct SectorReportRow {
  std::string name;
  double friction_share_mid;
  double floor_fraction;
  double revenue_at_risk_busd;
  double exposure_score;
  int rank;  // 1 = most exposed
  Exposure net_exposure;
};

/// max(φ_min, φ₀ e^{-γ_φ A}).
double friction(double A, const Calibration& c);

/// m₀ + γ_m φ.
double margin(double phi, const Calibration& c);

/// ṁ along A_t = A0 e^{g_A t}; zero while the friction floor binds.
double margin_compression_rate(double A, const Calibration& c);

/// γ_m (φ₀ - φ(A)) Q.
double revenue_at_risk(double Q, double A, const Calibration& c);

/// The seven sectors of the intermediation exposure table.
std::vector<SectorProfile> default_sectors();

/// Sector rows ranked by exposure score (see README for the convention).
std::vector<SectorReportRow> sector_report(const std::vector<SectorProfile>& sectors,
                                           const RegulatoryFloors& floors = {},
                                           const SwitchingDamping& damping = {});

std::vector<SectorProfile> load_sectors(const std::filesystem::path& path);
std::string sectors_csv(const std::vector<SectorProfile>& sectors);
std::string sector_report_csv(const std::vector<SectorReportRow>& rows);

const char* to_string(Level l);
const char* to_string(Exposure e);
Level parse_level(const std::string& s);
Exposure parse_exposure(const std::string& s);

}  // namespace aistress
