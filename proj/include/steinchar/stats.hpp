#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace steinchar {

/// Standard normal CDF through the complementary error function.
double normal_cdf(double x);

/// Half-width of the Dvoretzky-Kiefer-Wolfowitz band at confidence 1 - delta.
double dkw_epsilon(std::size_t count, double delta);

inline constexpr double kDefaultDelta = 0.01;

struct KolmogorovReport {
  double d_stat = 0.0;
  std::size_t count = 0;
  double delta = kDefaultDelta;
  double dkw_epsilon = 0.0;
  double bound_compared = 0.0;
  bool passed = false;
};

/// sup_x |F_m(x) - Phi(x)| of the sample, with the DKW band and the
/// comparison against `bound`.
KolmogorovReport kolmogorov_distance(std::vector<double> values, double bound, double delta = kDefaultDelta);

struct SlopeEstimate {
  double slope = 0.0;
  /// Heteroskedasticity-robust standard error.
  double standard_error = 0.0;
  double intercept = 0.0;
  std::size_t count = 0;
};

/// Least-squares slope of W' on W.
SlopeEstimate linearity_check(const std::vector<std::pair<double, double>>& pairs);

struct MeanEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

MeanEstimate mean_with_error(const std::vector<double>& values);

}  // namespace steinchar
