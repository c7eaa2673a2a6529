#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aistress/params.hpp"
#include "aistress/rng.hpp"

namespace aistress {

struct SamplingSpec {
  enum class Kind { Fixed, Uniform, LogUniform };
  Kind kind = Kind::Fixed;
  double lo = 0.0;
  double hi = 0.0;
  std::optional<double> value;  // Fixed only; empty keeps the base calibration value

  static SamplingSpec fixed(std::optional<double> v = std::nullopt) { return {Kind::Fixed, 0, 0, v}; }
  static SamplingSpec uniform(double lo, double hi) { return {Kind::Uniform, lo, hi, {}}; }
  static SamplingSpec log_uniform(double lo, double hi) { return {Kind::LogUniform, lo, hi, {}}; }
};

/// Sampling spec per parameter, in the draw order used by sample_calibration.
struct ParamRanges {
  SamplingSpec g_A;
  SamplingSpec kappa;
  SamplingSpec rho0;
  SamplingSpec eta;
  SamplingSpec beta_feedback;
  SamplingSpec chi_top;
  SamplingSpec mpc_labor;
  SamplingSpec d_bar;
  SamplingSpec f_slope;
};

inline constexpr int kDrawsPerAttempt = 9;
inline constexpr int kMaxSampleAttempts = 100;

/// Ranges centred on the default calibration.
ParamRanges default_ranges();
ParamRanges fixed_ranges();
std::vector<Violation> validate(const ParamRanges& r);

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Each attempt consumes exactly kDrawsPerAttempt uniforms, one per parameter in
/// declaration order, whether the parameter is fixed or not. Invalid draws are
/// rejected and re-drawn; after kMaxSampleAttempts a SamplingError names the
/// parameter that failed last.
Calibration sample_calibration(CounterRng& rng, const ParamRanges& ranges, const Calibration& base);

struct HistogramBin {
  double lo;
  double hi;
  std::size_t count;
};

struct McSummary {
  std::size_t n_draws = 0;
  std::size_t failures = 0;  // integrator failures, excluded from the statistics
  double median_shortfall = 0.0;
  double tail_prob = 0.0;
  double threshold = 0.0;
  std::vector<HistogramBin> histogram;
  std::uint64_t seed = 0;
  std::vector<double> shortfalls;  // per draw, NaN for failures
};

struct McOptions {
  double horizon = 10.0;
  double dt = 0.01;
  unsigned jobs = 1;
  int bins = 40;
  double bin_lo = -1.0;
  double bin_hi = 1.0;
};

/// Demand shortfall per draw: 1 - C(s_L(T)) / C(s_L0), no policy.
/// Draw i uses stream CounterRng::derive(seed, i), so results do not depend on `jobs`.
McSummary monte_carlo(std::size_t n, const ParamRanges& ranges, const Calibration& base,
                      std::uint64_t seed, double shortfall_threshold, const McOptions& opt = {});

std::string mc_summary_text(const McSummary& s);
std::string histogram_csv(const McSummary& s);

struct RegressionResult {
  std::vector<double> coefficients;
  std::vector<double> hc1_se;
  double r_squared = 0.0;
  std::size_t n = 0;
  std::vector<double> residuals;
};

class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Row-major n×k design (first column the intercept) and response of length n.
RegressionResult ols_hc1(const std::vector<std::vector<double>>& X, const std::vector<double>& y);

/// Builds the design from a named-column CSV and a formula `y ~ x1 + x2`; intercept added.
struct FormulaFit {
  std::string response;
  std::vector<std::string> terms;  // "(Intercept)" first
  RegressionResult result;
};
FormulaFit regress_formula(const std::string& csv_text, const std::string& formula);
std::string regression_table(const FormulaFit& fit);

}  // namespace aistress
