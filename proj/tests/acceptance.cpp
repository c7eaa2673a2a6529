// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aistress/credit.hpp"
#include "aistress/csv.hpp"
#include "aistress/dynamics.hpp"
#include "aistress/intermediation.hpp"
#include "aistress/monetary.hpp"
#include "aistress/parallel.hpp"
#include "aistress/params.hpp"
#include "aistress/policy.hpp"
#include "aistress/stochastics.hpp"
#include "cli.hpp"

using namespace aistress;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string f(double v, int digits = 6) { return fmt_sig(v, digits); }

Scenario scenario(double g_A, double lag = 0, double tau = 0) {
  Scenario s;
  s.name = "acceptance";
  s.g_A_override = g_A;
  s.policy.lag = lag;
  s.policy.tau = tau;
  return s;
}

Outcome dscr_worked_numbers() {
  const BorrowerState b{1.5, 0.20};
  const auto t0 = Clock::now();
  const double p0 = default_probability(b);
  const double p20 = shocked_default_probability(b, 0.20);
  const double p30 = shocked_default_probability(b, 0.30);
  const double ms = 1e3 * seconds_since(t0);
  const bool ok = std::abs(p0 - 0.021) <= 0.002 && std::abs(p20 - 0.181) <= 0.002 &&
                  std::abs(p30 - 0.403) <= 0.002 && ms < 1.0;
  return {ok, "P_D = " + f(p0, 4) + ", " + f(p20, 4) + ", " + f(p30, 4) + " in " + f(ms, 3) + " ms"};
}

Outcome amplifier_band() {
  const bool ok = amplifier_lower_bound(0.47, 0.10) == 0.047 && amplifier_lower_bound(0.59, 0.10) == 0.059 &&
                  amplifier_lower_bound(0.65, 0.10) == 0.065;
  return {ok, f(amplifier_lower_bound(0.47, 0.10), 17) + ", " + f(amplifier_lower_bound(0.59, 0.10), 17) + ", " +
                  f(amplifier_lower_bound(0.65, 0.10), 17)};
}

Outcome decomposition() {
  const auto s = consumption_shock(default_quintiles(), 0.10);
  const double top = s.per_quintile_pp[4];
  const bool ok = std::abs(top - 3.54) <= 0.05 && std::abs(s.total_pp - 3.92) <= 0.05;
  return {ok, "top " + f(top, 4) + " pp of " + f(s.total_pp, 4) + " pp"};
}

Outcome scenario_bands() {
  const Calibration c = default_calibration();
  const auto t0 = Clock::now();
  double dec[3];
  const double g[3] = {0.05, 0.20, 0.40};
  for (int i = 0; i < 3; ++i) {
    const Scenario s = scenario(g[i]);
    dec[i] = 100 * cumulative_consumption_decline(simulate_path(s, c), effective_calibration(c, s));
  }
  const double secs = seconds_since(t0);
  const bool ok = dec[0] < 5 && dec[1] >= 5 && dec[1] <= 12 && dec[2] >= 15 && dec[2] <= 30 && secs < 1.0;
  return {ok, "baseline " + f(dec[0], 4) + "%, rapid " + f(dec[1], 4) + "%, extreme " + f(dec[2], 4) + "% in " +
                  f(secs, 3) + " s"};
}

Outcome policy_stabilization() {
  const Calibration c = default_calibration();
  const double fast = simulate_path(scenario(0.20, 0.5, 0.10), c).final_labor_share();
  const double none = simulate_path(scenario(0.20), c).final_labor_share();
  bool slow_ok = true;
  std::string slow;
  for (double lag : {2.5, 3.0, 4.0}) {
    const Trajectory t = simulate_path(scenario(0.20, lag, 0.03), c);
    const double decline = 1.0 - t.min_labor_share() / c.s_L0;
    slow_ok = slow_ok && decline > 0.40;
    slow += (slow.empty() ? "" : ", ") + f(100 * decline, 3) + "% at lag " + f(lag);
  }
  const bool ok = fast >= 0.40 && none < 0.10 && slow_ok;
  return {ok, "s_L(10) " + f(fast, 4) + " with policy, " + f(none, 4) + " without; slow-small decline " + slow};
}

Outcome avertance_iff() {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> g(0.02, 0.45), lag(0, 5), tau(0, 0.25), h(2, 10);
  const Calibration c = default_calibration();
  int agree = 0, averted = 0;
  for (int i = 0; i < 200; ++i) {
    Scenario s = scenario(g(gen), lag(gen), tau(gen));
    s.horizon = h(gen);
    const Trajectory t = simulate_path(s, c);
    const bool keeps = transfers_keep_pace(t, s.policy);
    const bool zero = crisis_depth(t, s.policy) == 0.0;
    agree += keeps == zero;
    averted += zero;
  }
  return {agree == 200, std::to_string(agree) + "/200 agree (" + std::to_string(averted) + " averted)"};
}

Outcome velocity_law() {
  const Calibration c = default_calibration();
  const bool exact = velocity(c.s_L0, 0.0, c) == 1.41;
  double worst = 0;
  for (int i = 0; i <= 900; ++i) {
    const double s = 0.05 + 0.001 * i, h = 1e-5;
    const double fd = (std::log(velocity(s + h, 0, c)) - std::log(velocity(s - h, 0, c))) / (2 * h);
    const double closed = velocity_decline_rate(s, 1.0, c);
    worst = std::max(worst, std::abs(closed - fd) / std::abs(closed));
  }
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0, 1);
  int ordered = 0;
  for (int i = 0; i < 10000; ++i) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    ordered += velocity(a, 0, c) <= velocity(b, 0, c);
  }
  const bool ok = exact && worst <= 1e-6 && ordered == 10000;
  return {ok, std::string("V(s_L0) exact: ") + (exact ? "yes" : "no") + ", worst relative FD gap " + f(worst, 3) +
                  ", monotone pairs " + std::to_string(ordered) + "/10000"};
}

// |perturbed - reference| after `horizon` years, both integrated with RK4 at the same step.
double perturbation_gap(const Calibration& c, double g_A, double bump, double horizon) {
  Calibration k = c;
  k.g_A = g_A;
  const PolicySpec none{};
  const double dt = 0.01;
  double a = k.s_L0, b = k.s_L0 - bump;
  auto step = [&](double t, double s) {
    const double k1 = labor_share_derivative(t, s, k, none);
    const double k2 = labor_share_derivative(t + dt / 2, s + dt / 2 * k1, k, none);
    const double k3 = labor_share_derivative(t + dt / 2, s + dt / 2 * k2, k, none);
    const double k4 = labor_share_derivative(t + dt, s + dt * k3, k, none);
    return std::clamp(s + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4), 0.0, 1.0);
  };
  const int n = static_cast<int>(std::lround(horizon / dt));
  for (int i = 0; i < n; ++i) {
    a = step(i * dt, a);
    b = step(i * dt, b);
  }
  return std::abs(a - b);
}

Outcome regime_threshold() {
  const Calibration c = default_calibration();
  const double g0 = explosive_threshold(0.0, c);
  const bool value_ok = std::abs(g0 - 0.43824) <= 1e-5;

  Calibration hi_beta = c;
  hi_beta.beta_feedback = 0.40;
  Calibration lo_mpc = c;
  lo_mpc.mpc_labor = 0.80;
  lo_mpc.mpc_capital = 0.20;
  const double bump = 0.01, horizon = 2.0;
  int correct = 0;
  std::string detail;
  for (const Calibration& k : {c, hi_beta, lo_mpc}) {
    const double g_star = explosive_threshold(reinstatement_rate(k.A0, k), k);
    const double below = perturbation_gap(k, 0.99 * g_star, bump, horizon);
    const double above = perturbation_gap(k, 1.01 * g_star, bump, horizon);
    correct += below < bump;
    correct += above > bump;
    detail += " [g* " + f(g_star, 5) + ": gap " + f(below, 4) + " below, " + f(above, 4) + " above]";
  }
  return {value_ok && correct == 6,
          "g_A*,0 = " + f(g0, 8) + "; sign test " + std::to_string(correct) + "/6 (start gap " + f(bump) + ")" + detail};
}

Outcome intermediation_limits() {
  const Calibration c = default_calibration();
  const double limit = c.m0 + c.gamma_m * c.phi_min;
  const double far = std::abs(margin(friction(1e6, c), c) - limit);
  double worst = 0;
  for (double A : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    const double dt = 1e-6;
    const double t = std::log(A / c.A0) / c.g_A;
    const auto m_at = [&](double tt) { return margin(friction(c.A0 * std::exp(c.g_A * tt), c), c); };
    const double fd = (m_at(t + dt) - m_at(t - dt)) / (2 * dt);
    const double an = margin_compression_rate(A, c);
    worst = std::max(worst, std::abs(fd - an) / std::max(std::abs(an), 1e-12));
  }
  const auto rows = sector_report(default_sectors());
  std::string top;
  bool ranks_ok = true;
  for (const auto& r : rows)
    if (r.rank <= 3) {
      top += (top.empty() ? "" : ", ") + r.name;
      const bool named = r.name.find("SaaS") != std::string::npos || r.name.find("consulting") != std::string::npos ||
                         r.name.find("Travel") != std::string::npos;
      ranks_ok = ranks_ok && named;
    }
  const bool ok = far <= 1e-9 && worst <= 1e-6 && ranks_ok;
  return {ok, "limit gap " + f(far, 3) + ", compression FD gap " + f(worst, 3) + ", top 3: " + top};
}

Outcome monte_carlo_band() {
  const Calibration c = default_calibration();
  const auto t0 = Clock::now();
  const auto a = monte_carlo(2000, default_ranges(), c, 42, 0.30, McOptions{10.0, 0.01, default_jobs(), 40, -1, 1});
  const double secs = seconds_since(t0);
  const auto b = monte_carlo(2000, default_ranges(), c, 42, 0.30, McOptions{10.0, 0.01, 1, 40, -1, 1});
  const auto d = monte_carlo(2000, default_ranges(), c, 42, 0.30, McOptions{10.0, 0.01, 3, 40, -1, 1});
  const auto bytes = [](const McSummary& s) { return mc_summary_text(s) + histogram_csv(s); };
  bool identical = bytes(a) == bytes(b) && bytes(a) == bytes(d);
  for (std::size_t i = 0; i < a.shortfalls.size() && identical; ++i)
    identical = std::memcmp(&a.shortfalls[i], &b.shortfalls[i], sizeof(double)) == 0 &&
                std::memcmp(&a.shortfalls[i], &d.shortfalls[i], sizeof(double)) == 0;
  const bool ok = a.median_shortfall < 0.10 && a.tail_prob >= 0.08 && a.tail_prob <= 0.20 && identical && secs < 30;
  return {ok, "median " + f(a.median_shortfall, 4) + ", tail " + f(a.tail_prob, 4) + ", failures " +
                  std::to_string(a.failures) + ", identical across jobs: " + (identical ? "yes" : "no") + ", " +
                  f(secs, 3) + " s"};
}

Outcome ols_hc1_fixture() {
  std::vector<std::vector<double>> X;
  std::vector<double> clean, noisy;
  for (int i = 0; i < 22; ++i) {
    const double x = 0.1 * i + 0.03 * (i % 5);
    X.push_back({1.0, x});
    clean.push_back(2.5 - 1.25 * x);
    noisy.push_back(clean.back() + 0.1 * std::sin(1.7 * i) * (1 + x));
  }
  const auto exact = ols_hc1(X, clean);
  const bool coef_ok = std::abs(exact.coefficients[0] - 2.5) <= 1e-12 && std::abs(exact.coefficients[1] + 1.25) <= 1e-12;

  // sandwich by hand: (X'X)^-1 X' diag(e^2) X (X'X)^-1 * n/(n-k)
  double sxx[2][2] = {{0, 0}, {0, 0}}, sxy[2] = {0, 0};
  for (int i = 0; i < 22; ++i)
    for (int p = 0; p < 2; ++p) {
      sxy[p] += X[i][p] * noisy[i];
      for (int q = 0; q < 2; ++q) sxx[p][q] += X[i][p] * X[i][q];
    }
  const double det = sxx[0][0] * sxx[1][1] - sxx[0][1] * sxx[1][0];
  const double inv[2][2] = {{sxx[1][1] / det, -sxx[0][1] / det}, {-sxx[1][0] / det, sxx[0][0] / det}};
  const double beta[2] = {inv[0][0] * sxy[0] + inv[0][1] * sxy[1], inv[1][0] * sxy[0] + inv[1][1] * sxy[1]};
  double meat[2][2] = {{0, 0}, {0, 0}};
  for (int i = 0; i < 22; ++i) {
    const double e = noisy[i] - beta[0] - beta[1] * X[i][1];
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) meat[p][q] += e * e * X[i][p] * X[i][q];
  }
  double se[2];
  for (int j = 0; j < 2; ++j) {
    double v = 0;
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) v += inv[j][p] * meat[p][q] * inv[q][j];
    se[j] = std::sqrt(v * 22.0 / 20.0);
  }
  const auto fit = ols_hc1(X, noisy);
  const double gap = std::max(std::abs(fit.hc1_se[0] - se[0]), std::abs(fit.hc1_se[1] - se[1]));
  return {coef_ok && gap <= 1e-10,
          "noiseless coefficients " + f(exact.coefficients[0], 15) + ", " + f(exact.coefficients[1], 15) +
              "; HC1 gap " + f(gap, 3)};
}

Outcome phi_accuracy() {
  double worst = 0;
  for (int i = 0; i <= 1600; ++i) {
    const double x = -8.0 + 0.01 * i;
    const long double oracle = 0.5L * std::erfc(-static_cast<long double>(x) / std::sqrt(2.0L));
    worst = std::max(worst, static_cast<double>(std::fabs(static_cast<long double>(std_normal_cdf(x)) - oracle)));
  }
  return {worst <= 1e-9, "worst absolute error " + f(worst, 3) + " on 1601 points"};
}

Outcome repro_suite() {
  const fs::path root = fs::temp_directory_path() / "aistress_acceptance_repro";
  fs::remove_all(root);
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::run({"repro", "--out", root.string()}, out, err);
  const double secs = seconds_since(t0);
  if (code != 0) return {false, "exit " + std::to_string(code) + ": " + err.str()};
  fs::path dir;
  for (const auto& e : fs::directory_iterator(root)) dir = e.path();
  const std::vector<std::string> expected = {
      "fig3_baseline.csv", "fig3_rapid.csv", "fig3_extreme.csv", "fig3_rapid_tripled_reinstatement.csv",
      "fig3.svg", "table6_bands.csv", "fig4_sweep.csv", "fig4_policy_scenarios.csv", "fig4.svg",
      "dscr_table.csv", "decomposition.csv", "table1_report.csv", "montecarlo_summary.txt",
      "montecarlo_histogram.csv"};
  const std::string manifest = fs::exists(dir / "manifest.txt") ? read_file(dir / "manifest.txt") : "";
  int present = 0;
  for (const auto& name : expected)
    present += fs::exists(dir / name) && fs::file_size(dir / name) > 0 && manifest.find(name) != std::string::npos;
  const bool ok = !manifest.empty() && present == static_cast<int>(expected.size()) && secs < 60;
  fs::remove_all(root);
  return {ok, std::to_string(present) + "/" + std::to_string(expected.size()) + " artifacts listed in the manifest, " +
                  f(secs, 3) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"DSCR worked numbers", dscr_worked_numbers},
      {"amplifier band", amplifier_band},
      {"consumption decomposition", decomposition},
      {"scenario bands", scenario_bands},
      {"policy stabilization", policy_stabilization},
      {"avertance iff transfers keep pace", avertance_iff},
      {"velocity law", velocity_law},
      {"regime threshold and perturbation sign test", regime_threshold},
      {"intermediation limits", intermediation_limits},
      {"Monte Carlo band and determinism", monte_carlo_band},
      {"OLS with HC1", ols_hc1_fixture},
      {"normal CDF accuracy", phi_accuracy},
      {"repro suite", repro_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%-4s criterion %2zu  %-45s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
