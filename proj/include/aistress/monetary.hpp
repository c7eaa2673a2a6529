#pragma once

#include <array>
#include <filesystem>

#include "aistress/params.hpp"

namespace aistress {

struct QuintileEntry {
  double consumption_share = 0.0;
  double mpc = 0.0;
  double exposure = 0.0;  // income loss per unit aggregate shock
};

/// Five income quintiles, bottom to top. Shares sum to one.
struct QuintileProfile {
  std::array<QuintileEntry, 5> q{};

  const QuintileEntry& top() const { return q[4]; }
};

QuintileProfile default_quintiles();
std::vector<Violation> validate(const QuintileProfile& p);

/// Reads five data rows of `share,mpc,exposure` (an optional header row is skipped).
QuintileProfile load_quintiles(const std::filesystem::path& path);

struct GhostReading {
  double gY;
  double gW;
  double ghost;
};

struct ConsumptionShock {
  double total_pp;
  std::array<double, 5> per_quintile_pp;
};

/// C/Y = c̄ s_L + (1 - c̄)(1 - s_L).
double consumption_ratio(double s_L, const Calibration& c);

/// V_obs / consumption_ratio(s_L0): scale that pins velocity(s_L0, 0) to V_obs.
double velocity_scale(const Calibration& c);

double velocity(double s_L, double tau, const Calibration& c);

/// V̇/V for a labor-share change ds_L, with no transfers.
double velocity_decline_rate(double s_L, double ds_L, const Calibration& c);

GhostReading ghost_gdp(double gY, double gW);

/// Per-quintile share · shock · exposure, in percentage points of aggregate consumption.
ConsumptionShock consumption_shock(const QuintileProfile& p, double shock);

/// χ·δ₅, a floor on the aggregate consumption shock.
double amplifier_lower_bound(double chi, double delta5);

}  // namespace aistress
