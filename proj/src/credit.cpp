#include "aistress/credit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "aistress/csv.hpp"

namespace aistress {
namespace {

constexpr double kSeriesLimit = 2.5;

double erf_series(double z) {
  const double two_z2 = 2.0 * z * z;
  double term = z;
  double sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= two_z2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-z * z) * sum;
}

// Lentz evaluation of 1/(z + a1/(z + a2/(z + ...))) with a_k = k/2.
double erfc_fraction(double z) {
  constexpr double tiny = 1e-300;
  double f = z;
  double C = z;
  double D = 0.0;
  for (int k = 1; k < 500; ++k) {
    const double a = 0.5 * k;
    D = z + a * D;
    if (D == 0.0) D = tiny;
    C = z + a / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-z * z) / std::sqrt(std::numbers::pi) / f;
}

void check_borrower(const BorrowerState& b) {
  if (!(b.dscr > 0.0) || !(b.sigma_r > 0.0))
    throw std::invalid_argument("borrower requires dscr > 0 and sigma_r > 0");
}

}  // namespace

double erfc_scratch(double z) {
  if (z < 0.0) return 2.0 - erfc_scratch(-z);
  if (z <= kSeriesLimit) return 1.0 - erf_series(z);
  return erfc_fraction(z);
}

double std_normal_cdf(double x) {
  if (std::isnan(x)) return x;
  const double tail = 0.5 * erfc_scratch(std::abs(x) * std::numbers::sqrt2 * 0.5);
  return x < 0.0 ? tail : 1.0 - tail;
}

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double default_probability(const BorrowerState& b) {
  check_borrower(b);
  // ln(1) - ln(r) collapses to -ln(r)
  return std_normal_cdf(-std::log(b.dscr) / b.sigma_r);
}

double shocked_default_probability(const BorrowerState& b, double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::domain_error("income shock delta must lie in [0, 1); got " + fmt_sig(delta));
  return default_probability({b.dscr * (1.0 - delta), b.sigma_r});
}

double shocked_default_probability_slope(const BorrowerState& b, double delta) {
  check_borrower(b);
  const double z = (-std::log(b.dscr) - std::log1p(-delta)) / b.sigma_r;
  return std_normal_pdf(z) / (b.sigma_r * (1.0 - delta));
}

std::vector<SensitivityRow> dscr_sensitivity(const BorrowerState& b,
                                             const std::vector<double>& deltas) {
  if (!std::is_sorted(deltas.begin(), deltas.end()))
    throw std::invalid_argument("dscr_sensitivity: deltas must be ascending");
  std::vector<SensitivityRow> rows;
  rows.reserve(deltas.size());
  for (double d : deltas) rows.push_back({d, b.dscr * (1.0 - d), shocked_default_probability(b, d)});
  return rows;
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows) {
  std::string out = "delta,dscr_post,pd\n";
  for (const auto& r : rows)
    out += fmt_sig(r.delta) + ',' + fmt_sig(r.dscr_post) + ',' + fmt_sig(r.pd) + '\n';
  return out;
}

std::vector<ConvexityPoint> convexity_check(const BorrowerState& b,
                                            const std::vector<double>& grid) {
  if (grid.size() < 3) throw std::invalid_argument("convexity_check needs at least 3 grid points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("convexity_check grid must be strictly ascending");

  std::vector<double> pd(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) pd[i] = shocked_default_probability(b, grid[i]);

  std::vector<ConvexityPoint> out;
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double h1 = grid[i] - grid[i - 1];
    const double h2 = grid[i + 1] - grid[i];
    const double d2 = 2.0 * ((pd[i + 1] - pd[i]) / h2 - (pd[i] - pd[i - 1]) / h1) / (h1 + h2);
    const double post = b.dscr * (1.0 - grid[i]);
    out.push_back({grid[i], d2, post, post >= 0.7 && post <= 1.4, d2 >= 0.0});
  }
  return out;
}

}  // namespace aistress
