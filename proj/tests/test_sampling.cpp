#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "steinchar/sampling.hpp"
#include "steinchar/stats.hpp"

using namespace steinchar;

namespace {

constexpr double kPi = std::numbers::pi;

// Kolmogorov distance of a sample to a continuous CDF.
template <class Cdf>
double ks_distance(std::vector<double> v, Cdf cdf) {
  std::sort(v.begin(), v.end());
  const double m = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, std::abs((i + 1) / m - f), std::abs(i / m - f)});
  }
  return d;
}

// 1% critical value of the one-sample Kolmogorov-Smirnov test.
double ks_critical(std::size_t m) { return 1.63 / std::sqrt(static_cast<double>(m)); }

bool within(const MeanEstimate& est, double target, double z = 4.0) {
  return std::abs(est.mean - target) <= z * est.standard_error;
}

}  // namespace

TEST_CASE("sampled matrices lie in their groups") {
  Rng rng(3);
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const Eigen::MatrixXcd u = haar_unitary(n, rng);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
    for (auto comp : {OrthogonalComponent::Full, OrthogonalComponent::Special}) {
      const Eigen::MatrixXd o = haar_orthogonal(n, rng, comp);
      CHECK((o * o.transpose() - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12);
      if (comp == OrthogonalComponent::Special) CHECK(o.determinant() == doctest::Approx(1.0));
    }
    const Eigen::MatrixXcd s = haar_symplectic(n, rng);
    const Eigen::MatrixXcd j = symplectic_form(n);
    CHECK((s * s.adjoint() - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).norm() < 1e-12);
    CHECK((s * j * s.transpose() - j).norm() < 1e-12);
    const Eigen::MatrixXcd c = coe_matrix(n, rng);
    CHECK((c - c.transpose()).norm() < 1e-12);
    CHECK((c * c.adjoint() - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
    const Eigen::MatrixXcd q = cse_matrix(n, rng);
    // Self-dual: J q^T J^T = q.
    CHECK((j * q.transpose() * j.transpose() - q).norm() < 1e-12);
  }
}

TEST_CASE("full orthogonal group has both determinants equally often") {
  Rng rng(5);
  const int draws = 4000;
  int negative = 0;
  for (int i = 0; i < draws; ++i) negative += haar_orthogonal(4, rng, OrthogonalComponent::Full).determinant() < 0;
  // Binomial(4000, 1/2) has standard deviation 31.6.
  CHECK(std::abs(negative - draws / 2) < 130);
}

TEST_CASE("trace moments of the classical groups") {
  Rng rng(7);
  const int draws = 20000;
  std::vector<double> u2, u4, o2, sp2;
  for (int i = 0; i < draws; ++i) {
    const double tu = std::norm(haar_unitary(3, rng).trace());
    u2.push_back(tu);
    u4.push_back(tu * tu);
    o2.push_back(std::pow(haar_orthogonal(5, rng, OrthogonalComponent::Special).trace(), 2));
    sp2.push_back(std::pow(haar_symplectic(2, rng).trace().real(), 2));
  }
  // E|Tr U|^2 = 1, E|Tr U|^4 = 2 for n >= 2, E Tr^2 = 1 for SO(5) and USp(4).
  CHECK(within(mean_with_error(u2), 1.0));
  CHECK(within(mean_with_error(u4), 2.0));
  CHECK(within(mean_with_error(o2), 1.0));
  CHECK(within(mean_with_error(sp2), 1.0));
}

TEST_CASE("U(1) phase is uniform") {
  Rng rng(11);
  std::vector<double> phases;
  for (int i = 0; i < 20000; ++i) phases.push_back(std::arg(haar_unitary(1, rng)(0, 0)));
  CHECK(ks_distance(phases, [](double x) { return (x + kPi) / (2 * kPi); }) < ks_critical(phases.size()));
}

TEST_CASE("coordinate on the 2-sphere is uniform on [-1, 1]") {
  Rng rng(13);
  std::vector<double> xs;
  for (int i = 0; i < 20000; ++i) xs.push_back(sphere_sample(3, rng));
  CHECK(ks_distance(xs, [](double x) { return (x + 1) / 2; }) < ks_critical(xs.size()));
}

TEST_CASE("W is centered with unit variance for every family") {
  for (Family f : all_families()) {
    const SampleBatch batch = sample_w(f, 3, 30000, 21);
    REQUIRE(batch.values.size() == 30000);
    std::vector<double> sq;
    for (double w : batch.values) sq.push_back(w * w);
    CHECK(within(mean_with_error(batch.values), 0.0));
    CHECK(within(mean_with_error(sq), 1.0));
  }
}

TEST_CASE("sampling is reproducible and independent of the batch split") {
  const SampleBatch a = sample_w(Family::COE, 4, 10000, 99);
  const SampleBatch b = sample_w(Family::COE, 4, 10000, 99);
  const SampleBatch c = sample_w(Family::COE, 4, 20000, 99);
  const SampleBatch d = sample_w(Family::COE, 4, 10000, 100);
  CHECK(a.values == b.values);
  CHECK(std::equal(a.values.begin(), a.values.end(), c.values.begin()));
  CHECK(a.values != d.values);
  const PairBatch p = sample_pairs(Family::U, 3, 1.0, 5000, 4);
  const PairBatch q = sample_pairs(Family::U, 3, 1.0, 5000, 4);
  CHECK(p.pairs == q.pairs);
}

TEST_CASE("pairs are exchangeable") {
  for (Family f : all_families()) {
    for (std::size_t n : {2u, 4u}) {
      const PairBatch batch = sample_pairs(f, n, 1.0, 40000, 31);
      std::vector<double> diff, cross;
      for (const auto& [w, wp] : batch.pairs) {
        diff.push_back(wp - w);
        cross.push_back(w * w * wp - w * wp * wp);
      }
      CHECK(within(mean_with_error(diff), 0.0));
      CHECK(within(mean_with_error(cross), 0.0));
    }
  }
}

TEST_CASE("pair at angle pi/2 on the circle") {
  // On the circle the pair rotates by +-theta, so W^2 + W'^2 = 2 at theta = pi/2.
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto [w, wp] = exchangeable_pair(Family::Sphere, 2, kPi / 2, rng);
    CHECK(w * w + wp * wp == doctest::Approx(2.0));
  }
}

TEST_CASE("Metropolis chains reproduce exact eigenvalue statistics") {
  ChainParams params;
  params.count = 20000;
  Rng rng(41);

  // Two COE eigenvalues: density |sin(d/2)| in the wrapped gap d, whose mean is 2.
  params.beta = 1.0;
  params.step = 1.5;
  ChainReport coe = weyl_mcmc(WeylDensity::Circular, 2, params, rng);
  double gap = 0.0;
  for (const auto& a : coe.angles) {
    double d = std::fmod(std::abs(a[0] - a[1]), 2 * kPi);
    gap += std::min(d, 2 * kPi - d) / static_cast<double>(coe.angles.size());
  }
  CHECK(gap == doctest::Approx(2.0).epsilon(0.03));
  CHECK(coe.warnings.empty());
  params.step = 0.5;

  // E (Re p1)^2 = n/(n+1) (COE), 1/2 (U), n/(2(2n-1)) (CSE), n/2 (flat).
  const std::size_t n = 3;
  const std::vector<std::pair<double, double>> cases{{1.0, 0.75}, {2.0, 0.5}, {4.0, 0.3}, {0.0, 1.5}};
  for (const auto& [beta, expected] : cases) {
    params.beta = beta;
    const ChainReport r = weyl_mcmc(WeylDensity::Circular, n, params, rng);
    double s = 0.0;
    for (const auto& a : r.angles) {
      double c = 0.0;
      for (double phi : a) c += std::cos(phi);
      s += c * c / static_cast<double>(r.angles.size());
    }
    CHECK(s == doctest::Approx(expected).epsilon(0.06));
    CHECK(r.acceptance_rate > 0.1);
    CHECK(std::abs(r.lag1_autocorrelation) < 0.9);
  }

  // Weyl densities of USp(4) and SO(5): E Tr^2 = 1.
  params.beta = 2.0;
  for (WeylDensity dens : {WeylDensity::Symplectic, WeylDensity::OddOrthogonal}) {
    const ChainReport r = weyl_mcmc(dens, 2, params, rng);
    double s = 0.0;
    for (const auto& a : r.angles) {
      double tr = dens == WeylDensity::OddOrthogonal ? 1.0 : 0.0;
      for (double phi : a) tr += 2 * std::cos(phi);
      s += tr * tr / static_cast<double>(r.angles.size());
    }
    CHECK(s == doctest::Approx(1.0).epsilon(0.06));
  }
}

TEST_CASE("Metropolis diagnostics") {
  ChainParams params;
  params.count = 2000;
  params.step = 1e-4;
  Rng rng(2);
  const ChainReport r = weyl_mcmc(WeylDensity::Circular, 3, params, rng);
  CHECK(r.acceptance_rate > 0.9);
  CHECK_FALSE(r.warnings.empty());
  CHECK(weyl_density_of(Family::COE).second == 1.0);
  CHECK(weyl_density_of(Family::CSE).second == 4.0);
  CHECK_THROWS_AS(weyl_density_of(Family::OEven), std::invalid_argument);
  CHECK_THROWS_AS(weyl_density_of(Family::Sphere), std::invalid_argument);
}

TEST_CASE("sampler preconditions") {
  CHECK_THROWS_AS(sample_w(Family::U, 1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_pairs(Family::USp, 3, 0.0, 10, 1), std::invalid_argument);
}
