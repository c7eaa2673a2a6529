#pragma once

#include <string>
#include <vector>

namespace aistress {

struct BorrowerState {
  double dscr;     // income / debt service
  double sigma_r;  // income volatility
};

/// Standard normal CDF. Absolute error below 1e-15 on [-8, 8]; Φ(0) = 0.5 exactly.
///
/// Built on erfc(z): for z ≤ 2.5 the positive-term series
///   erf(z) = (2/√π) e^{-z²} Σ (2z²)ⁿ z / (1·3·…·(2n+1)),
/// which has no cancellation; beyond that the Laplace continued fraction
///   erfc(z) = e^{-z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + …)))),
/// evaluated with the modified Lentz method, which keeps relative accuracy
/// deep in the tail.
double std_normal_cdf(double x);
double std_normal_pdf(double x);
double erfc_scratch(double z);

/// Φ(-ln r / σ_r).
double default_probability(const BorrowerState& b);

/// Default probability after a permanent income loss δ: r → r(1-δ). Rejects δ ∉ [0,1).
double shocked_default_probability(const BorrowerState& b, double delta);

/// ∂P_D/∂δ = φ(z) / (σ_r (1-δ)).
double shocked_default_probability_slope(const BorrowerState& b, double delta);

struct SensitivityRow {
  double delta;
  double dscr_post;
  double pd;
};

std::vector<SensitivityRow> dscr_sensitivity(const BorrowerState& b,
                                             const std::vector<double>& deltas);

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows);

struct ConvexityPoint {
  double delta;
  double second_difference;  // three-point divided difference, works on uneven grids
  double dscr_post;
  bool near_threshold;  // post-shock DSCR within [0.7, 1.4]
  bool convex;          // second_difference ≥ 0
};

/// Second differences of P_D(δ) at every interior grid point.
std::vector<ConvexityPoint> convexity_check(const BorrowerState& b,
                                            const std::vector<double>& delta_grid);

}  // namespace aistress
