#include "aistress/policy.hpp"

#include <algorithm>

#include "aistress/csv.hpp"
#include "aistress/monetary.hpp"
#include "aistress/parallel.hpp"

namespace aistress {

double transfer_at(double t, const PolicySpec& p) {
  return t >= p.start_time + p.lag ? p.tau : 0.0;
}

double crisis_depth(const Trajectory& traj, const PolicySpec& p) {
  const double s0 = traj.points.front().s_L;
  double depth = 0.0;
  for (const auto& pt : traj.points)
    depth = std::max(depth, (s0 - pt.s_L) - transfer_at(pt.t, p));
  return depth;
}

bool transfers_keep_pace(const Trajectory& traj, const PolicySpec& p) {
  const double s0 = traj.points.front().s_L;
  return std::all_of(traj.points.begin(), traj.points.end(), [&](const TrajectoryPoint& pt) {
    return transfer_at(pt.t, p) >= s0 - pt.s_L;
  });
}

std::vector<Violation> validate(const PolicyGrid& g) {
  std::vector<Violation> v;
  if (g.lags.empty()) v.push_back({"lags", "lag list must be non-empty"});
  if (g.taus.empty()) v.push_back({"taus", "tau list must be non-empty"});
  if (!std::is_sorted(g.lags.begin(), g.lags.end()))
    v.push_back({"lags", "lags must be ascending"});
  if (!std::is_sorted(g.taus.begin(), g.taus.end()))
    v.push_back({"taus", "taus must be ascending"});
  for (double l : g.lags)
    if (l < 0) v.push_back({"lags", "lags must be ≥ 0"});
  for (double t : g.taus)
    if (t < 0) v.push_back({"taus", "taus must be ≥ 0"});
  for (auto& sv : validate(g.base)) v.push_back(sv);
  return v;
}

std::vector<SweepCell> policy_sweep(const PolicyGrid& grid, const Calibration& c, unsigned jobs) {
  if (auto vs = validate(grid); !vs.empty()) throw ConfigError("policy grid: " + vs.front().message);
  const Calibration eff = effective_calibration(c, grid.base);
  const double c0 = consumption_ratio(eff.s_L0, eff);
  const std::size_t nt = grid.taus.size();
  std::vector<SweepCell> cells(grid.lags.size() * nt);

  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    Scenario s = grid.base;
    s.policy.lag = grid.lags[i / nt];
    s.policy.tau = grid.taus[i % nt];
    Trajectory traj;
    try {
      traj = simulate_path(s, c);
    } catch (const NumericError& e) {
      throw NumericError("sweep cell (lag = " + fmt_sig(s.policy.lag) +
                         ", tau = " + fmt_sig(s.policy.tau) + "): " + e.what());
    }
    cells[i] = {s.policy.lag, s.policy.tau, crisis_depth(traj, s.policy), traj.final_labor_share(),
                100.0 * (1.0 - traj.back().consumption_ratio / c0)};
  });
  return cells;
}

std::string sweep_csv(const std::vector<SweepCell>& cells) {
  std::string out = "lag,tau,depth,s_L_final,consumption_decline_pct\n";
  for (const auto& cell : cells)
    out += fmt_sig(cell.lag) + ',' + fmt_sig(cell.tau) + ',' + fmt_sig(cell.depth) + ',' +
           fmt_sig(cell.s_L_final) + ',' + fmt_sig(cell.consumption_decline_pct) + '\n';
  return out;
}

}  // namespace aistress
