#include "aistress/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "aistress/csv.hpp"
#include "aistress/monetary.hpp"
#include "aistress/policy.hpp"

namespace aistress {
namespace {

void require_finite(double v, double t, const char* term) {
  if (!std::isfinite(v))
    throw NumericError("non-finite " + std::string(term) + " at t = " + fmt_sig(t) +
                       " (value " + fmt_sig(v) + ")");
}

std::size_t step_count(double horizon, double dt) {
  const double n = std::ceil(horizon / dt - 1e-9);
  return static_cast<std::size_t>(std::max(1.0, n));
}

TrajectoryPoint observe(double t, double s_L, const Calibration& c, const PolicySpec& p) {
  TrajectoryPoint pt{};
  pt.t = t;
  pt.s_L = s_L;
  pt.d_t = diffusion(t, c);
  pt.A_t = capability(t, c);
  pt.rho_t = reinstatement_rate(pt.A_t, c);
  pt.tau_effective = transfer_at(t, p);
  pt.pi_t = margin_pressure(s_L + pt.tau_effective, c);
  pt.velocity = velocity(s_L, pt.tau_effective, c);
  pt.consumption_ratio = consumption_ratio(s_L, c);
  return pt;
}

}  // namespace

double Trajectory::min_labor_share() const {
  double m = points.front().s_L;
  for (const auto& p : points) m = std::min(m, p.s_L);
  return m;
}

const char* to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::ReinstatementDominated: return "ReinstatementDominated";
    case RegimeKind::StableDisplacement: return "StableDisplacement";
    case RegimeKind::ExplosiveDisplacement: return "ExplosiveDisplacement";
  }
  return "?";
}

double capability(double t, const Calibration& c) { return c.A0 * std::exp(c.g_A * t); }

double ai_cost(double t, const Calibration& c) { return std::exp(-c.g_c * t); }

double diffusion(double t, const Calibration& c) {
  return c.d_bar / (1.0 + std::exp(-c.kappa * (t - c.t0_diffusion)));
}

double reinstatement_rate(double A, const Calibration& c) {
  return c.rho0 + c.eta * std::pow(A, c.alpha_rho);
}

double margin_pressure(double s_L, const Calibration& c) {
  const double expected = consumption_ratio(c.s_L0, c);
  const double gap = (2.0 * c.mpc_labor - 1.0) * (c.s_L0 - s_L) / expected;
  return std::max(0.0, gap);
}

double labor_share_derivative(double t, double s_L, const Calibration& c, const PolicySpec& p) {
  const double substitution = diffusion(t, c) * c.f_slope * c.g_A;
  const double feedback = c.beta_feedback * margin_pressure(s_L + transfer_at(t, p), c);
  const double reinstatement = reinstatement_rate(capability(t, c), c);
  require_finite(substitution, t, "substitution term d(t)·f'·g_A");
  require_finite(feedback, t, "feedback term β·π");
  require_finite(reinstatement, t, "reinstatement term ρ(A_t)");

  const double raw = -substitution - feedback + reinstatement;
  if (s_L <= 0.0 && raw < 0.0) return 0.0;
  if (s_L >= 1.0 && raw > 0.0) return 0.0;
  return raw;
}

Trajectory simulate_path(const Scenario& s, const Calibration& base) {
  if (auto vs = validate(s); !vs.empty()) throw ConfigError("scenario '" + s.name + "': " + vs.front().message);
  const Calibration c = effective_calibration(base, s);
  const PolicySpec& p = s.policy;

  Trajectory traj;
  traj.dt = s.dt;
  const std::size_t n = step_count(s.horizon, s.dt);
  traj.points.reserve(n + 1);

  double y = c.s_L0;
  traj.points.push_back(observe(0.0, y, c, p));
  if (y <= c.s_floor) traj.collapse_time = 0.0;

  double t = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double t_next = std::min(static_cast<double>(i) * s.dt, s.horizon);
    const double h = t_next - t;
    const double k1 = labor_share_derivative(t, y, c, p);
    const double k2 = labor_share_derivative(t + 0.5 * h, y + 0.5 * h * k1, c, p);
    const double k3 = labor_share_derivative(t + 0.5 * h, y + 0.5 * h * k2, c, p);
    const double k4 = labor_share_derivative(t + h, y + h * k3, c, p);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    require_finite(y, t_next, "labor share s_L");
    y = std::clamp(y, 0.0, 1.0);
    t = t_next;
    traj.points.push_back(observe(t, y, c, p));
    if (!traj.collapse_time && y <= c.s_floor) traj.collapse_time = t;
  }
  return traj;
}

std::vector<double> simulate_euler(const Scenario& s, const Calibration& base, double dt) {
  const Calibration c = effective_calibration(base, s);
  const std::size_t n = step_count(s.horizon, dt);
  std::vector<double> out;
  out.reserve(n + 1);
  double y = c.s_L0;
  double t = 0.0;
  out.push_back(y);
  for (std::size_t i = 1; i <= n; ++i) {
    const double t_next = std::min(static_cast<double>(i) * dt, s.horizon);
    y = std::clamp(y + (t_next - t) * labor_share_derivative(t, y, c, s.policy), 0.0, 1.0);
    t = t_next;
    out.push_back(y);
  }
  return out;
}

double explosive_threshold(double rho, const Calibration& c) {
  const double bc = c.beta_feedback * c.mpc_labor;
  const double base = (1.0 - bc) / bc * c.f_slope;
  return base * (1.0 + rho / (c.d_bar * c.f_slope));
}

Regime regime_classify(const Calibration& c) {
  const double rho = reinstatement_rate(c.A0, c);
  const double threshold = explosive_threshold(rho, c);
  // evaluated at the diffusion ceiling
  if (rho > c.d_bar * c.f_slope * c.g_A) return {RegimeKind::ReinstatementDominated, threshold};
  if (c.g_A > threshold) return {RegimeKind::ExplosiveDisplacement, threshold};
  return {RegimeKind::StableDisplacement, threshold};
}

double cumulative_consumption_decline(const Trajectory& traj, const Calibration& c) {
  const auto& pts = traj.points;
  if (pts.size() < 2) return 0.0;
  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    area += 0.5 * (pts[i].t - pts[i - 1].t) * (pts[i].consumption_ratio + pts[i - 1].consumption_ratio);
  const double baseline = consumption_ratio(c.s_L0, c) * (pts.back().t - pts.front().t);
  return 1.0 - area / baseline;
}

double terminal_demand_shortfall(const Trajectory& traj, const Calibration& c) {
  return 1.0 - traj.back().consumption_ratio / consumption_ratio(c.s_L0, c);
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,s_L,d_t,A_t,rho_t,pi_t,velocity,consumption_ratio,tau_effective\n";
  for (const auto& p : traj.points) {
    out += fmt_sig(p.t) + ',' + fmt_sig(p.s_L) + ',' + fmt_sig(p.d_t) + ',' + fmt_sig(p.A_t) + ',' +
           fmt_sig(p.rho_t) + ',' + fmt_sig(p.pi_t) + ',' + fmt_sig(p.velocity) + ',' +
           fmt_sig(p.consumption_ratio) + ',' + fmt_sig(p.tau_effective) + '\n';
  }
  return out;
}

}  // namespace aistress
