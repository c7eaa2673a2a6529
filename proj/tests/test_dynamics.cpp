#include <doctest.h>

#include <cmath>
#include <random>

#include "aistress/dynamics.hpp"

using namespace aistress;

namespace {

// Explicit Euler straight from the model equations, sharing no code with the engine.
double euler_oracle(const Calibration& c, double tau, double lag, double horizon, double dt) {
  const double cb = c.mpc_labor;
  const double cr0 = cb * c.s_L0 + (1 - cb) * (1 - c.s_L0);
  double s = c.s_L0;
  const long n = std::lround(horizon / dt);
  for (long i = 0; i < n; ++i) {
    const double t = i * dt;
    const double A = c.A0 * std::exp(c.g_A * t);
    const double d = c.d_bar / (1 + std::exp(-c.kappa * (t - c.t0_diffusion)));
    const double rho = c.rho0 + c.eta * std::pow(A, c.alpha_rho);
    const double tr = t >= lag ? tau : 0.0;
    const double pi = std::max(0.0, (2 * cb - 1) * (c.s_L0 - (s + tr)) / cr0);
    double ds = -d * c.f_slope * c.g_A - c.beta_feedback * pi + rho;
    if (s <= 0 && ds < 0) ds = 0;
    s = std::clamp(s + dt * ds, 0.0, 1.0);
  }
  return s;
}

Scenario scenario(double g_A, double horizon = 10, double dt = 0.01) {
  Scenario s;
  s.name = "t";
  s.g_A_override = g_A;
  s.horizon = horizon;
  s.dt = dt;
  return s;
}

}  // namespace

TEST_CASE("capability and cost") {
  Calibration c = default_calibration();
  CHECK(capability(0, c) == c.A0);
  CHECK(capability(10, c) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));
  CHECK(capability(10, c) == doctest::Approx(1.6487).epsilon(1e-4));
  c.g_A = 0;
  for (double t : {0.0, 1.0, 7.5}) CHECK(capability(t, c) == c.A0);

  c = default_calibration();
  CHECK(ai_cost(0, c) == 1.0);
  CHECK(ai_cost(1, c) == doctest::Approx(0.7408).epsilon(1e-4));
  c.g_c = 0;
  CHECK(ai_cost(3.3, c) == 1.0);
}

TEST_CASE("logistic diffusion") {
  const Calibration c = default_calibration();
  CHECK(diffusion(c.t0_diffusion, c) == doctest::Approx(0.40).epsilon(1e-15));
  CHECK(diffusion(c.t0_diffusion + 1, c) == doctest::Approx(0.8 / (1 + std::exp(-2.0))).epsilon(1e-14));
  CHECK(diffusion(c.t0_diffusion + 1, c) == doctest::Approx(0.704638).epsilon(1e-6));
  for (double t = c.t0_diffusion + 8; t < c.t0_diffusion + 40; t += 0.7)
    CHECK(std::abs(diffusion(t, c) - 0.8) < 1e-6);

  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0, 30);
  for (int i = 0; i < 2000; ++i) {
    double t1 = u(gen), t2 = u(gen);
    if (t1 > t2) std::swap(t1, t2);
    CHECK(diffusion(t2, c) >= diffusion(t1, c));
    CHECK(diffusion(t2, c) <= c.d_bar);
  }
}

TEST_CASE("reinstatement") {
  Calibration c = default_calibration();
  CHECK(reinstatement_rate(1, c) == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(reinstatement_rate(4, c) == doctest::Approx(0.008).epsilon(1e-14));
  c.eta = 0;
  CHECK(reinstatement_rate(9, c) == c.rho0);
}

TEST_CASE("margin pressure") {
  const Calibration c = default_calibration();
  CHECK(margin_pressure(c.s_L0, c) == 0.0);
  CHECK(margin_pressure(0.46, c) == doctest::Approx(0.7 * 0.10 / 0.542).epsilon(1e-12));
  CHECK(margin_pressure(0.46, c) == doctest::Approx(0.12915).epsilon(1e-4));
  CHECK(margin_pressure(0.7, c) == 0.0);
}

TEST_CASE("labor share derivative") {
  Calibration c = default_calibration();
  SUBCASE("only reinstatement active") {
    c.d_bar = 0;
    const double v = labor_share_derivative(0.0, c.s_L0, c, {});
    CHECK(v > 0);
    CHECK(v == doctest::Approx(reinstatement_rate(c.A0, c)));
  }
  SUBCASE("floor absorbs") {
    c.g_A = 0.4;
    CHECK(labor_share_derivative(6.0, 0.0, c, {}) == 0.0);
  }
  SUBCASE("non-finite terms name t and the term") {
    c.g_A = 900;
    try {
      labor_share_derivative(1.0, 0.3, c, {});
      FAIL("expected NumericError");
    } catch (const NumericError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("t = 1") != std::string::npos);
      CHECK(msg.find("reinstatement") != std::string::npos);
    }
  }
  SUBCASE("integration failure propagates") {
    c.g_A = 900;
    CHECK_THROWS_AS(simulate_path(scenario(900), c), NumericError);
  }
}

TEST_CASE("simulate_path") {
  const Calibration c = default_calibration();

  SUBCASE("zero dynamics keep the share constant") {
    Calibration z = c;
    z.d_bar = 0;
    z.rho0 = 0;
    z.eta = 0;
    const Trajectory t = simulate_path(scenario(0), z);
    for (const auto& p : t.points) CHECK(p.s_L == c.s_L0);
  }

  SUBCASE("baseline agrees with a small-step Euler oracle and stays near s_L0") {
    const Trajectory t = simulate_path(scenario(0.05), c);
    CHECK(t.back().t == doctest::Approx(10.0).epsilon(1e-12));
    Calibration e = c;
    e.g_A = 0.05;
    CHECK(std::abs(t.final_labor_share() - euler_oracle(e, 0, 0, 10, 1e-4)) <= 1e-4);
    CHECK(std::abs(t.final_labor_share() - c.s_L0) < 0.02);
    CHECK(!t.collapse_time);
  }

  SUBCASE("rapid and policy runs agree with the oracle") {
    Calibration e = c;
    e.g_A = 0.20;
    Scenario s = scenario(0.20);
    CHECK(std::abs(simulate_path(s, c).final_labor_share() - euler_oracle(e, 0, 0, 10, 1e-4)) <= 1e-4);
    s.policy = {0.10, 0.5, 0.0};
    CHECK(std::abs(simulate_path(s, c).final_labor_share() - euler_oracle(e, 0.10, 0.5, 10, 1e-4)) <= 1e-4);
  }

  SUBCASE("extreme adoption collapses within the horizon") {
    const Trajectory t = simulate_path(scenario(0.40), c);
    REQUIRE(t.collapse_time);
    CHECK(*t.collapse_time > 0);
    CHECK(*t.collapse_time <= 10);
  }

  SUBCASE("final step lands on the horizon") {
    const Trajectory t = simulate_path(scenario(0.2, 1.0, 0.03), c);
    CHECK(t.back().t == 1.0);
    CHECK(t.points.size() == 35);
  }

  SUBCASE("invalid step is rejected") {
    CHECK_THROWS_AS(simulate_path(scenario(0.2, 10, 0.5), c), ConfigError);
  }
}

TEST_CASE("RK4 converges at fourth order on a smooth run") {
  Calibration c = default_calibration();
  c.rho0 = 0;
  c.eta = 0;  // share falls from t = 0, so the margin-pressure clamp never switches
  auto end = [&](double dt) { return simulate_path(scenario(0.2, 6, dt), c).final_labor_share(); };
  const double e1 = std::abs(end(0.04) - end(0.02));
  const double e2 = std::abs(end(0.02) - end(0.01));
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 <= 1.0 * std::pow(0.04, 4));
}

TEST_CASE("share stays in [0,1] for random admissible calibrations") {
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    Calibration c = default_calibration();
    c.s_L0 = 0.05 + 0.9 * u(gen);
    c.mpc_labor = 0.51 + 0.48 * u(gen);
    c.mpc_capital = 1 - c.mpc_labor;
    c.d_bar = 0.05 + 0.95 * u(gen);
    c.kappa = 0.2 + 5 * u(gen);
    c.t0_diffusion = 6 * u(gen);
    c.rho0 = 0.05 * u(gen);
    c.eta = 0.05 * u(gen);
    c.alpha_rho = 0.05 + 0.9 * u(gen);
    c.beta_feedback = 0.01 + u(gen);
    c.f_slope = 0.01 + 0.5 * u(gen);
    c.s_floor = 0.01 * c.s_L0;
    c.sbar_eff = c.d_bar * c.sbar;
    REQUIRE(validate(c).empty());
    const Trajectory t = simulate_path(scenario(u(gen) * 1.5, 12, 0.05), c);
    for (const auto& p : t.points) {
      CHECK(p.s_L >= 0.0);
      CHECK(p.s_L <= 1.0);
    }
    if (t.collapse_time) CHECK(t.min_labor_share() <= c.s_floor);
  }
}

TEST_CASE("explosive threshold and regimes") {
  Calibration c = default_calibration();
  const double base = (1 - 0.30 * 0.85) / (0.30 * 0.85) * 0.15;
  CHECK(explosive_threshold(0, c) == doctest::Approx(base).epsilon(1e-14));
  CHECK(explosive_threshold(0, c) == doctest::Approx(0.43824).epsilon(1e-5));
  CHECK(explosive_threshold(c.d_bar * c.f_slope, c) == doctest::Approx(2 * base).epsilon(1e-14));

  CHECK(regime_classify(c).kind == RegimeKind::StableDisplacement);
  CHECK(regime_classify(c).threshold == doctest::Approx(base * (1 + 0.005 / 0.12)));

  Calibration r = c;
  r.rho0 = 0.05;
  CHECK(regime_classify(r).kind == RegimeKind::ReinstatementDominated);

  Calibration x = c;
  x.g_A = regime_classify(c).threshold * 1.01;
  CHECK(regime_classify(x).kind == RegimeKind::ExplosiveDisplacement);
}

TEST_CASE("stronger reinstatement raises the bar") {
  const Calibration c = default_calibration();
  Calibration strong = c;
  strong.rho0 *= 3;
  strong.eta *= 3;
  for (double g : {0.05, 0.20, 0.40}) {
    CHECK(simulate_path(scenario(g), strong).final_labor_share() >
          simulate_path(scenario(g), c).final_labor_share());
  }
  CHECK(explosive_threshold(reinstatement_rate(1, strong), strong) >
        explosive_threshold(reinstatement_rate(1, c), c));
}

TEST_CASE("consumption measures") {
  const Calibration c = default_calibration();
  const Trajectory t = simulate_path(scenario(0.20), c);
  const double cr0 = 0.85 * 0.56 + 0.15 * 0.44;
  double area = 0;
  for (std::size_t i = 1; i < t.points.size(); ++i) {
    const auto& a = t.points[i - 1];
    const auto& b = t.points[i];
    const double ca = 0.85 * a.s_L + 0.15 * (1 - a.s_L);
    const double cb = 0.85 * b.s_L + 0.15 * (1 - b.s_L);
    area += 0.5 * (b.t - a.t) * (ca + cb);
  }
  CHECK(cumulative_consumption_decline(t, c) == doctest::Approx(1 - area / (10 * cr0)).epsilon(1e-12));
  const double sT = t.final_labor_share();
  CHECK(terminal_demand_shortfall(t, c) ==
        doctest::Approx(1 - (0.85 * sT + 0.15 * (1 - sT)) / cr0).epsilon(1e-12));
}

TEST_CASE("trajectory CSV") {
  const Trajectory t = simulate_path(scenario(0.05, 0.05, 0.01), default_calibration());
  const std::string csv = trajectory_csv(t);
  CHECK(csv.rfind("t,s_L,d_t,A_t,rho_t,pi_t,velocity,consumption_ratio,tau_effective\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  CHECK(csv.find("\n0,0.56,") != std::string::npos);
}
