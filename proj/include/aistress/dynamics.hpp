#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "aistress/params.hpp"

namespace aistress {

/// Non-finite state during integration.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrajectoryPoint {
  double t;
  double s_L;
  double d_t;
  double A_t;
  double rho_t;
  double pi_t;
  double velocity;
  double consumption_ratio;
  double tau_effective;
};

struct Trajectory {
  std::vector<TrajectoryPoint> points;
  std::optional<double> collapse_time;
  double dt = 0.0;

  const TrajectoryPoint& back() const { return points.back(); }
  double final_labor_share() const { return points.back().s_L; }
  double min_labor_share() const;
};

enum class RegimeKind { ReinstatementDominated, StableDisplacement, ExplosiveDisplacement };

struct Regime {
  RegimeKind kind;
  double threshold;  // g_A*(ρ(A0))
};

const char* to_string(RegimeKind k);

/// A0·exp(g_A t).
double capability(double t, const Calibration& c);

/// AI cost index, normalized to 1 at t = 0.
double ai_cost(double t, const Calibration& c);

/// Logistic adoption d̄ / (1 + exp(-κ (t - t₀))).
double diffusion(double t, const Calibration& c);

/// ρ₀ + η A^α_ρ.
double reinstatement_rate(double A, const Calibration& c);

/// Demand gap relative to the no-displacement counterfactual, clamped at zero.
///
/// Expected demand is the consumption ratio at s_L0; realized demand is the
/// ratio at `s_L`. With c̄ = mpc_labor this is
/// (2c̄-1)(s_L0 - s_L) / [c̄ s_L0 + (1-c̄)(1-s_L0)].
double margin_pressure(double s_L, const Calibration& c);

/// Right-hand side of the labor-share ODE.
///
/// Direct substitution d(t)·f′·g_A and the feedback β·π pull the share down;
/// reinstatement ρ(A_t) pushes it up. An active transfer τ moves τ of output
/// from capital to labor income, so margin pressure is read at s_L + τ. The
/// share is absorbed at 0 and capped at 1.
double labor_share_derivative(double t, double s_L, const Calibration& c, const PolicySpec& p);

/// Fixed-step RK4 from (0, s_L0) to the scenario horizon.
Trajectory simulate_path(const Scenario& s, const Calibration& c);

/// Integrates with explicit Euler; test oracle and cross-check only.
std::vector<double> simulate_euler(const Scenario& s, const Calibration& c, double dt);

/// g_A*(ρ) = g_A*,0 (1 + ρ/(d̄ f′)), g_A*,0 = f′(1 - βc̄)/(βc̄).
double explosive_threshold(double rho, const Calibration& c);

Regime regime_classify(const Calibration& c);

/// 1 - ∫C dt / ∫C₀ dt over the trajectory (trapezoid rule), C₀ at s_L0.
double cumulative_consumption_decline(const Trajectory& traj, const Calibration& c);

/// 1 - C(s_L(T)) / C(s_L0).
double terminal_demand_shortfall(const Trajectory& traj, const Calibration& c);

/// CSV with columns t,s_L,d_t,A_t,rho_t,pi_t,velocity,consumption_ratio,tau_effective.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace aistress
