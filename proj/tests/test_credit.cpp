#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "aistress/credit.hpp"

using namespace aistress;

namespace {

// libm extended-precision complementary error function as the reference
long double phi_oracle(long double x) { return 0.5L * std::erfc(-x / std::sqrt(2.0L)); }

}  // namespace

TEST_CASE("normal CDF") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  CHECK(std_normal_cdf(1.959964) == doctest::Approx(0.975).epsilon(1e-8));
  const double tail = std_normal_cdf(-8.0);
  CHECK(tail > 0.0);
  CHECK(tail == doctest::Approx(6.22e-16).epsilon(1e-3));
  CHECK(std::abs(tail - static_cast<double>(phi_oracle(-8.0L))) <= 1e-13 * tail);

  double worst = 0.0;
  for (int i = 0; i <= 1600; ++i) {
    const double x = -8.0 + i * 0.01;
    worst = std::max(worst, std::abs(std_normal_cdf(x) - static_cast<double>(phi_oracle(x))));
  }
  CHECK(worst <= 1e-9);
  CHECK(worst <= 1e-15);

  // relative accuracy holds in the lower tail too
  for (double x = -30; x < -3; x += 0.25) {
    const double ref = static_cast<double>(phi_oracle(x));
    CHECK(std::abs(std_normal_cdf(x) - ref) <= 1e-12 * ref);
  }
  CHECK(std_normal_cdf(40) == 1.0);
  CHECK(std_normal_pdf(0) == doctest::Approx(1 / std::sqrt(2 * M_PI)).epsilon(1e-15));
}

TEST_CASE("default probability worked numbers") {
  const BorrowerState b{1.5, 0.20};
  const auto start = std::chrono::steady_clock::now();
  const double p0 = default_probability(b);
  const double p20 = shocked_default_probability(b, 0.20);
  const double p30 = shocked_default_probability(b, 0.30);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(std::abs(p0 - 0.021) <= 0.002);
  CHECK(std::abs(p20 - 0.181) <= 0.002);
  CHECK(std::abs(p30 - 0.403) <= 0.002);
  CHECK(p20 / p0 > 8.0);
  CHECK(p20 / p0 < 9.0);
  CHECK(elapsed < 1e-3);

  CHECK(default_probability({1.0, 0.2}) == 0.5);
  CHECK(std::abs(default_probability({1.2, 0.2}) - 0.181) <= 0.002);
  CHECK(shocked_default_probability(b, 0.0) == p0);
  CHECK(p20 == doctest::Approx(default_probability({1.2, 0.2})).epsilon(1e-14));

  CHECK_THROWS_AS(shocked_default_probability(b, 1.0), std::domain_error);
  CHECK_THROWS_AS(shocked_default_probability(b, -0.1), std::domain_error);
  CHECK_THROWS_AS(default_probability({0.0, 0.2}), std::invalid_argument);
}

TEST_CASE("monotonicity over random borrowers") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 5000; ++i) {
    const double r = 0.5 + 1.5 * u(gen), s = 0.05 + 0.4 * u(gen), d = 0.6 * u(gen);
    const double r2 = r * (1.001 + 0.2 * u(gen));
    CHECK(default_probability({r2, s}) <= default_probability({r, s}));
    if (std::abs(std::log(r) / s) < 7) CHECK(default_probability({r2, s}) < default_probability({r, s}));
    const double d2 = d + 0.001 + 0.2 * u(gen);
    if (std::abs(std::log(r * (1 - d)) / s) < 7)
      CHECK(shocked_default_probability({r, s}, d2) > shocked_default_probability({r, s}, d));
    if (r > 1.01 && std::log(r) / s < 7) {
      const double s2 = s * (1.001 + 0.5 * u(gen));
      CHECK(default_probability({r, s2}) > default_probability({r, s}));
    }
  }
}

TEST_CASE("slope in delta matches finite differences") {
  for (double r : {1.1, 1.5, 2.0})
    for (double s : {0.1, 0.2, 0.35})
      for (double d = 0.0; d < 0.7; d += 0.05) {
        const BorrowerState b{r, s};
        const double z = -std::log(r * (1 - d)) / s;
        if (std::abs(z) > 5) continue;  // saturated
        const double h = 1e-5;
        const auto P = [&](double x) { return shocked_default_probability(b, x); };
        const double fd = d < h ? (-3 * P(d) + 4 * P(d + h) - P(d + 2 * h)) / (2 * h)
                                : (P(d + h) - P(d - h)) / (2 * h);
        const double an = shocked_default_probability_slope(b, d);
        CHECK(std::abs(an - fd) <= 1e-6 * std::abs(an) + 1e-12);
      }
}

TEST_CASE("sensitivity table") {
  const BorrowerState b{1.5, 0.20};
  const auto rows = dscr_sensitivity(b, {0, 0.20, 0.30});
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].dscr_post == doctest::Approx(1.2).epsilon(1e-15));
  CHECK(std::abs(rows[0].pd - 0.021) <= 0.002);
  CHECK(std::abs(rows[1].pd - 0.181) <= 0.002);
  CHECK(std::abs(rows[2].pd - 0.403) <= 0.002);
  CHECK(dscr_sensitivity(b, {}).empty());
  const auto dup = dscr_sensitivity(b, {0.1, 0.1});
  CHECK(dup[0].pd == dup[1].pd);
  CHECK(dup[0].dscr_post == dup[1].dscr_post);
  CHECK_THROWS_AS(dscr_sensitivity(b, {0.5, 1.0}), std::domain_error);
  CHECK(sensitivity_csv(rows).rfind("delta,dscr_post,pd\n", 0) == 0);
}

TEST_CASE("convexity") {
  const BorrowerState b{1.5, 0.20};
  const auto pts = convexity_check(b, {0, 0.20, 0.30});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].second_difference > 0);
  CHECK(pts[0].convex);
  const double p0 = 0.021, p20 = 0.181, p30 = 0.403;
  CHECK((p30 - p20) > (p20 - p0) / 2);  // per 10 pp of income loss
  CHECK((shocked_default_probability(b, 0.3) - shocked_default_probability(b, 0.2)) >
        (shocked_default_probability(b, 0.2) - shocked_default_probability(b, 0.1)));

  const auto flat = convexity_check({1.0, 1e6}, {0.0, 0.1, 0.2, 0.3});
  for (const auto& p : flat) CHECK(std::abs(p.second_difference) < 1e-6);

  CHECK_THROWS_AS(convexity_check(b, {0, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(convexity_check(b, {0, 0.2, 0.1}), std::invalid_argument);

  // convex wherever the post-shock ratio sits in [exp(-σ²), 1.4]
  for (double s : {0.1, 0.2, 0.3}) {
    const double lo = std::exp(-s * s);
    const BorrowerState r{1.4, s};
    std::vector<double> grid;
    for (double d = 0; 1.4 * (1 - d) >= lo; d += 0.01) grid.push_back(d);
    for (const auto& p : convexity_check(r, grid)) {
      CHECK(p.convex);
      CHECK(p.near_threshold == (p.dscr_post >= 0.7 && p.dscr_post <= 1.4));
    }
  }
}
