#pragma once

#include <string>
#include <vector>

#include "aistress/dynamics.hpp"
#include "aistress/params.hpp"

namespace aistress {

/// Step activation: 0 before start_time + lag, τ afterwards.
double transfer_at(double t, const PolicySpec& p);

/// max over t of max(0, Δs_L(t) - τ(t - ℓ)), Δs_L measured from the first point.
double crisis_depth(const Trajectory& traj, const PolicySpec& p);

/// True when τ(t - ℓ) ≥ Δs_L(t) at every recorded step.
bool transfers_keep_pace(const Trajectory& traj, const PolicySpec& p);

struct PolicyGrid {
  std::vector<double> lags;
  std::vector<double> taus;
  Scenario base;  // horizon, dt, g_A override; its policy is replaced per cell
};

std::vector<Violation> validate(const PolicyGrid& g);

struct SweepCell {
  double lag;
  double tau;
  double depth;
  double s_L_final;
  double consumption_decline_pct;
};

/// One simulation per (lag, tau); cells ordered lag-major.
std::vector<SweepCell> policy_sweep(const PolicyGrid& grid, const Calibration& c,
                                    unsigned jobs = 1);

std::string sweep_csv(const std::vector<SweepCell>& cells);

}  // namespace aistress
