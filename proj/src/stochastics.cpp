#include "aistress/stochastics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aistress/csv.hpp"
#include "aistress/dynamics.hpp"
#include "aistress/parallel.hpp"

namespace aistress {
namespace {

struct Slot {
  const char* name;
  SamplingSpec ParamRanges::*spec;
  double Calibration::*field;
};

constexpr Slot kSlots[kDrawsPerAttempt] = {
    {"g_A", &ParamRanges::g_A, &Calibration::g_A},
    {"kappa", &ParamRanges::kappa, &Calibration::kappa},
    {"rho0", &ParamRanges::rho0, &Calibration::rho0},
    {"eta", &ParamRanges::eta, &Calibration::eta},
    {"beta_feedback", &ParamRanges::beta_feedback, &Calibration::beta_feedback},
    {"chi_top", &ParamRanges::chi_top, &Calibration::chi_top},
    {"mpc_labor", &ParamRanges::mpc_labor, &Calibration::mpc_labor},
    {"d_bar", &ParamRanges::d_bar, &Calibration::d_bar},
    {"f_slope", &ParamRanges::f_slope, &Calibration::f_slope},
};

double draw(const SamplingSpec& s, double base, double u) {
  switch (s.kind) {
    case SamplingSpec::Kind::Fixed: return s.value.value_or(base);
    case SamplingSpec::Kind::Uniform: return s.lo + (s.hi - s.lo) * u;
    case SamplingSpec::Kind::LogUniform:
      if (s.lo == s.hi) return s.lo;
      return std::exp(std::log(s.lo) + (std::log(s.hi) - std::log(s.lo)) * u);
  }
  return base;
}

}  // namespace

ParamRanges default_ranges() {
  return {
      SamplingSpec::log_uniform(0.02, 0.40),  SamplingSpec::uniform(0.5, 4.0),
      SamplingSpec::uniform(0.001, 0.006),    SamplingSpec::uniform(0.001, 0.009),
      SamplingSpec::uniform(0.15, 0.45),      SamplingSpec::uniform(0.47, 0.65),
      SamplingSpec::uniform(0.75, 0.92),      SamplingSpec::uniform(0.6, 0.9),
      SamplingSpec::uniform(0.10, 0.20),
  };
}

ParamRanges fixed_ranges() { return {}; }

std::vector<Violation> validate(const ParamRanges& r) {
  std::vector<Violation> v;
  for (const auto& slot : kSlots) {
    const SamplingSpec& s = r.*(slot.spec);
    if (s.kind == SamplingSpec::Kind::Fixed) continue;
    if (!(s.lo <= s.hi) || !std::isfinite(s.lo) || !std::isfinite(s.hi))
      v.push_back({slot.name, std::string(slot.name) + ": range requires lo ≤ hi"});
    if (s.kind == SamplingSpec::Kind::LogUniform && !(s.lo > 0))
      v.push_back({slot.name, std::string(slot.name) + ": log-uniform requires lo > 0"});
  }
  return v;
}

Calibration sample_calibration(CounterRng& rng, const ParamRanges& ranges, const Calibration& base) {
  if (auto vs = validate(ranges); !vs.empty()) throw SamplingError(vs.front().message);
  std::string last_bad = "?";
  for (int attempt = 0; attempt < kMaxSampleAttempts; ++attempt) {
    Calibration c = base;
    for (const auto& slot : kSlots) c.*(slot.field) = draw(ranges.*(slot.spec), base.*(slot.field), rng.uniform());
    c.mpc_capital = 1.0 - c.mpc_labor;
    c.sbar_eff = c.d_bar * c.sbar;
    const auto vs = validate(c);
    if (vs.empty()) return c;
    last_bad = vs.front().field;
  }
  throw SamplingError("sampling exhausted " + std::to_string(kMaxSampleAttempts) +
                      " attempts; parameter '" + last_bad + "' keeps failing validation");
}

McSummary monte_carlo(std::size_t n, const ParamRanges& ranges, const Calibration& base,
                      std::uint64_t seed, double threshold, const McOptions& opt) {
  if (n == 0) throw std::invalid_argument("monte_carlo needs n ≥ 1");
  if (auto vs = validate(ranges); !vs.empty()) throw SamplingError(vs.front().message);

  Scenario scen;
  scen.name = "montecarlo";
  scen.horizon = opt.horizon;
  scen.dt = opt.dt;

  McSummary out;
  out.n_draws = n;
  out.seed = seed;
  out.threshold = threshold;
  out.shortfalls.assign(n, std::numeric_limits<double>::quiet_NaN());

  parallel_for(n, opt.jobs, [&](std::size_t i) {
    CounterRng rng(CounterRng::derive(seed, i));
    const Calibration c = sample_calibration(rng, ranges, base);
    try {
      out.shortfalls[i] = terminal_demand_shortfall(simulate_path(scen, c), c);
    } catch (const NumericError&) {
      // left as NaN and counted below
    }
  });

  std::vector<double> ok;
  ok.reserve(n);
  for (double s : out.shortfalls)
    if (std::isnan(s)) ++out.failures;
    else ok.push_back(s);

  const int bins = std::max(1, opt.bins);
  const double width = (opt.bin_hi - opt.bin_lo) / bins;
  out.histogram.resize(bins);
  for (int b = 0; b < bins; ++b)
    out.histogram[b] = {opt.bin_lo + b * width, opt.bin_lo + (b + 1) * width, 0};
  for (double s : ok) {
    const int b = std::clamp(static_cast<int>(std::floor((s - opt.bin_lo) / width)), 0, bins - 1);
    ++out.histogram[b].count;
  }

  if (!ok.empty()) {
    std::size_t tail = 0;
    for (double s : ok) tail += s > threshold ? 1 : 0;
    out.tail_prob = static_cast<double>(tail) / static_cast<double>(ok.size());
    std::sort(ok.begin(), ok.end());
    const std::size_t m = ok.size() / 2;
    out.median_shortfall = ok.size() % 2 ? ok[m] : 0.5 * (ok[m - 1] + ok[m]);
  }
  return out;
}

std::string mc_summary_text(const McSummary& s) {
  std::string out;
  out += "n_draws = " + std::to_string(s.n_draws) + "\n";
  out += "failures = " + std::to_string(s.failures) + "\n";
  out += "seed = " + std::to_string(s.seed) + "\n";
  out += "threshold = " + fmt_sig(s.threshold) + "\n";
  out += "median_shortfall = " + fmt_sig(s.median_shortfall) + "\n";
  out += "tail_prob = " + fmt_sig(s.tail_prob) + "\n";
  return out;
}

std::string histogram_csv(const McSummary& s) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (const auto& b : s.histogram)
    out += fmt_sig(b.lo) + ',' + fmt_sig(b.hi) + ',' + std::to_string(b.count) + '\n';
  return out;
}

RegressionResult ols_hc1(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
  const std::size_t n = rows.size();
  const std::size_t k = n ? rows.front().size() : 0;
  if (k == 0 || y.size() != n) throw std::invalid_argument("ols_hc1: design and response sizes differ");
  if (n <= k) throw std::invalid_argument("ols_hc1: need more observations than regressors");

  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd Y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != k) throw std::invalid_argument("ols_hc1: ragged design matrix");
    for (std::size_t j = 0; j < k; ++j) X(i, j) = rows[i][j];
    Y(i) = y[i];
  }

  // First column that adds no rank is the dependent one.
  for (std::size_t j = 0; j < k; ++j) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X.leftCols(j + 1));
    qr.setThreshold(1e-10);
    if (static_cast<std::size_t>(qr.rank()) < j + 1)
      throw RankDeficientError("design matrix is rank deficient: column " + std::to_string(j) +
                                   " is a linear combination of earlier columns",
                               j);
  }

  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
  const Eigen::VectorXd beta = qr.solve(Y);
  const Eigen::VectorXd e = Y - X * beta;

  const Eigen::MatrixXd R = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const Eigen::MatrixXd bread = Rinv * Rinv.transpose();  // (XᵀX)⁻¹
  const Eigen::MatrixXd meat = X.transpose() * e.array().square().matrix().asDiagonal() * X;
  const Eigen::MatrixXd cov =
      bread * meat * bread * (static_cast<double>(n) / static_cast<double>(n - k));

  RegressionResult r;
  r.n = n;
  r.coefficients.assign(beta.data(), beta.data() + k);
  r.hc1_se.resize(k);
  for (std::size_t j = 0; j < k; ++j) r.hc1_se[j] = std::sqrt(std::max(0.0, cov(j, j)));
  r.residuals.assign(e.data(), e.data() + n);

  const double mean = Y.mean();
  const double sst = (Y.array() - mean).square().sum();
  const double ssr = e.squaredNorm();
  r.r_squared = sst > 0.0 ? std::clamp(1.0 - ssr / sst, 0.0, 1.0) : 0.0;
  return r;
}

FormulaFit regress_formula(const std::string& csv_text, const std::string& formula) {
  const auto tilde = formula.find('~');
  if (tilde == std::string::npos) throw ConfigError("formula must look like 'y ~ x1 + x2'");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  FormulaFit fit;
  fit.response = trim(formula.substr(0, tilde));
  fit.terms.push_back("(Intercept)");
  std::istringstream rhs(formula.substr(tilde + 1));
  std::string term;
  while (std::getline(rhs, term, '+')) {
    term = trim(term);
    if (term.empty()) throw ConfigError("empty term in formula '" + formula + "'");
    if (term != "1") fit.terms.push_back(term);
  }

  const CsvTable t = parse_csv(csv_text, true);
  const int yi = t.column(fit.response);
  if (yi < 0) throw ConfigError("response column '" + fit.response + "' not found");
  std::vector<int> cols;
  for (std::size_t j = 1; j < fit.terms.size(); ++j) {
    const int c = t.column(fit.terms[j]);
    if (c < 0) throw ConfigError("column '" + fit.terms[j] + "' not found");
    cols.push_back(c);
  }

  std::vector<std::vector<double>> X;
  std::vector<double> y;
  int line = 1;
  for (const auto& r : t.rows) {
    ++line;
    std::vector<double> row{1.0};
    for (int c : cols) row.push_back(parse_number(r.at(c), line, t.header[c]));
    X.push_back(std::move(row));
    y.push_back(parse_number(r.at(yi), line, fit.response));
  }
  fit.result = ols_hc1(X, y);
  return fit;
}

std::string regression_table(const FormulaFit& fit) {
  std::string out = "term,estimate,hc1_se\n";
  for (std::size_t j = 0; j < fit.terms.size(); ++j)
    out += fit.terms[j] + ',' + fmt_sig(fit.result.coefficients[j], 12) + ',' +
           fmt_sig(fit.result.hc1_se[j], 12) + '\n';
  out += "# n = " + std::to_string(fit.result.n) + ", R2 = " + fmt_sig(fit.result.r_squared, 12) + "\n";
  return out;
}

}  // namespace aistress
