#include "steinchar/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steinchar {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double dkw_epsilon(std::size_t count, double delta) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(count)));
}

KolmogorovReport kolmogorov_distance(std::vector<double> values, double bound, double delta) {
  if (values.empty()) throw std::invalid_argument("empty batch");
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double phi = normal_cdf(values[i]);
    d = std::max({d, std::abs(static_cast<double>(i + 1) / m - phi), std::abs(static_cast<double>(i) / m - phi)});
  }
  KolmogorovReport r;
  r.d_stat = d;
  r.count = values.size();
  r.delta = delta;
  r.dkw_epsilon = dkw_epsilon(values.size(), delta);
  r.bound_compared = bound;
  r.passed = r.d_stat + r.dkw_epsilon <= bound;
  return r;
}

SlopeEstimate linearity_check(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 3) throw std::invalid_argument("need at least 3 pairs");
  const double m = static_cast<double>(pairs.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pairs) {
    mx += x;
    my += y;
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("degenerate variance: all W equal");
  SlopeEstimate est;
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  est.count = pairs.size();
  // HC0 sandwich variance of the slope.
  double meat = 0.0;
  for (const auto& [x, y] : pairs) {
    const double resid = y - est.intercept - est.slope * x;
    meat += (x - mx) * (x - mx) * resid * resid;
  }
  est.standard_error = std::sqrt(meat) / sxx;
  return est;
}

MeanEstimate mean_with_error(const std::vector<double>& values) {
  if (values.size() < 2) throw std::invalid_argument("need at least 2 values");
  const double m = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= m;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (m - 1.0) / m)};
}

}  // namespace steinchar
