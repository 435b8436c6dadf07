#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "steinchar/characters.hpp"
#include "steinchar/sampling.hpp"
#include "steinchar/stats.hpp"
#include "steinchar/stein.hpp"

using namespace steinchar;

namespace {

// Composite Simpson integral of the normal density over [0, |x|].
double normal_cdf_by_quadrature(double x) {
  const int steps = 20000;
  const double h = std::abs(x) / steps;
  auto pdf = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2 * std::numbers::pi); };
  double s = pdf(0) + pdf(std::abs(x));
  for (int i = 1; i < steps; ++i) s += (i % 2 ? 4 : 2) * pdf(i * h);
  const double half = s * h / 3;
  return x >= 0 ? 0.5 + half : 0.5 - half;
}

// sup |F_m - Phi| by scanning both one-sided limits at every sample point.
double brute_force_distance(const std::vector<double>& v) {
  double d = 0.0;
  for (double x : v) {
    const double below = static_cast<double>(std::count_if(v.begin(), v.end(), [&](double y) { return y < x; }));
    const double upto = static_cast<double>(std::count_if(v.begin(), v.end(), [&](double y) { return y <= x; }));
    const double m = static_cast<double>(v.size());
    d = std::max({d, std::abs(below / m - normal_cdf(x)), std::abs(upto / m - normal_cdf(x))});
  }
  return d;
}

}  // namespace

TEST_CASE("normal CDF") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-15));
  CHECK(normal_cdf(-1.96) == doctest::Approx(0.024997895148220435).epsilon(1e-14));
  for (double x : {-6.0, -2.5, -0.3, 0.7, 1.5, 4.0}) {
    CHECK(normal_cdf(x) + normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(normal_cdf(x) - normal_cdf_by_quadrature(x)) < 1e-14);
  }
  // Deep tail keeps relative accuracy.
  CHECK(normal_cdf(-10.0) == doctest::Approx(7.619853024160527e-24).epsilon(1e-13));
}

TEST_CASE("Kolmogorov distance of a small sample") {
  const KolmogorovReport r = kolmogorov_distance({-1.0, 0.0, 1.0}, 1.0);
  CHECK(r.d_stat == doctest::Approx(1.0 / 3 - normal_cdf(-1.0)).epsilon(1e-14));
  CHECK(r.d_stat == doctest::Approx(0.17467).epsilon(1e-4));
  CHECK(r.count == 3);
}

TEST_CASE("Kolmogorov distance matches a brute-force scan") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.2, 1.1);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> v(300);
    for (double& x : v) x = normal(rng);
    v[7] = v[3];  // a tie
    const double d = kolmogorov_distance(v, 1.0).d_stat;
    CHECK(d == doctest::Approx(brute_force_distance(v)).epsilon(1e-14));
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(kolmogorov_distance(v, 1.0).d_stat == d);
  }
}

TEST_CASE("DKW band and pass decision") {
  CHECK(dkw_epsilon(200000, 0.01) == doctest::Approx(std::sqrt(std::log(200.0) / 400000)));
  CHECK(dkw_epsilon(400, 0.05) == doctest::Approx(2 * dkw_epsilon(1600, 0.05)));
  const KolmogorovReport r = kolmogorov_distance({-1.0, 0.0, 1.0}, 2.0, 0.05);
  CHECK(r.dkw_epsilon == doctest::Approx(dkw_epsilon(3, 0.05)));
  CHECK(r.bound_compared == 2.0);
  CHECK(r.passed == (r.d_stat + r.dkw_epsilon <= 2.0));
  CHECK_FALSE(kolmogorov_distance({-1.0, 0.0, 1.0}, 0.1).passed);
  CHECK_THROWS_AS(dkw_epsilon(0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(dkw_epsilon(10, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(kolmogorov_distance({}, 1.0), std::invalid_argument);
}

TEST_CASE("regression slope on synthetic data") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  std::vector<std::pair<double, double>> pairs;
  for (int i = 0; i < 20000; ++i) {
    const double w = normal(rng);
    // Noise whose spread depends on w.
    pairs.push_back({w, 0.6 * w + 0.3 * (1 + std::abs(w)) * normal(rng)});
  }
  const SlopeEstimate s = linearity_check(pairs);
  CHECK(std::abs(s.slope - 0.6) < 3 * s.standard_error);
  CHECK(s.standard_error > 0.0);
  CHECK(s.count == 20000);

  // Exact line.
  const SlopeEstimate e = linearity_check({{0, 1}, {1, 3}, {2, 5}, {3, 7}});
  CHECK(e.slope == doctest::Approx(2.0));
  CHECK(e.intercept == doctest::Approx(1.0));
  CHECK(e.standard_error == doctest::Approx(0.0));

  CHECK_THROWS_AS(linearity_check({{0, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(linearity_check({{1, 1}, {1, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("simulated pairs satisfy the linearity condition") {
  for (Family f : {Family::USp, Family::Sphere}) {
    const std::size_t n = 3;
    const double theta = 1.0;
    const PairBatch batch = sample_pairs(f, n, theta, 50000, 12);
    const SlopeEstimate s = linearity_check(batch.pairs);
    const double a = builtin_table(f, n).a(ClassParameter::for_family(f, theta));
    CHECK(std::abs(s.slope - (1 - a)) < 3 * s.standard_error);
  }
}

TEST_CASE("mean with standard error") {
  const MeanEstimate m = mean_with_error({1.0, 2.0, 3.0, 4.0});
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.standard_error == doctest::Approx(std::sqrt(5.0 / 3 / 4)));
  CHECK_THROWS_AS(mean_with_error({1.0}), std::invalid_argument);
}
