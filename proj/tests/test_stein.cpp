#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "closed_forms.hpp"
#include "steinchar/sampling.hpp"
#include "steinchar/spherical.hpp"
#include "steinchar/stats.hpp"
#include "steinchar/stein.hpp"

using namespace steinchar;

namespace {

constexpr double kPi = std::numbers::pi;

bool close(double x, double y, double rel) { return std::abs(x - y) <= rel * std::max({std::abs(x), std::abs(y), 1e-300}); }

DecompositionTable two_component(double tau_ratio, double phi_ratio, double phi_m) {
  return fixed_table(CaseKind::Real, tau_ratio, 4.0,
                     {{"trivial", 1.0, 1.0, 1.0, true}, {"phi", phi_m, 3.0, phi_ratio, false}});
}

const std::vector<std::size_t> kSizes{2, 3, 5, 10, 50};

}  // namespace

TEST_CASE("hand-computed two-component table") {
  // a = 0.3, phi has deficit 0.3: the bracket is 1.
  const DecompositionTable t = two_component(0.7, 0.7, 1.0);
  const ClassParameter p = ClassParameter::angle(1.0);
  const BoundReport r = real_bound(t, p);
  CHECK(r.a == doctest::Approx(0.3));
  CHECK(r.term1 == doctest::Approx(1.0));
  // e4 = 8a (trivial) + (8a - 6a) = 3
  CHECK(r.term2 == doctest::Approx(std::pow(10.0 / kPi, 0.25)));
  CHECK(r.total == doctest::Approx(r.term1 + r.term2));
  CHECK_FALSE(r.limit_term1.has_value());

  // phi with deficit 2a contributes nothing to term1.
  CHECK(real_bound(two_component(0.7, 0.4, 1.0), p).term1 == doctest::Approx(0.0));
}

TEST_CASE("fourth moment on the circle by quadrature") {
  // W = sqrt(2) cos(phi), W' = sqrt(2) cos(phi + theta).
  const DecompositionTable t = sphere_table(2);
  for (double theta : {0.1, 1.0, 2.0, 3.0}) {
    const int grid = 64;
    double m2 = 0.0, m4 = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double phi = 2 * kPi * j / grid;
      const double d = std::sqrt(2.0) * (std::cos(phi + theta) - std::cos(phi));
      m2 += d * d / grid;
      m4 += d * d * d * d / grid;
    }
    const MomentReport mr = moments(t, ClassParameter::cosine(std::cos(theta)));
    CHECK(mr.e2 == doctest::Approx(m2).epsilon(1e-12));
    CHECK(mr.e4 == doctest::Approx(m4).epsilon(1e-12));
  }
}

TEST_CASE("fourth moment of USp(4) against simulation") {
  const double theta = kPi / 2;
  const DecompositionTable t = builtin_table(Family::USp, 2);
  const MomentReport mr = moments(t, ClassParameter::angle(theta));
  const PairBatch batch = sample_pairs(Family::USp, 2, theta, 100000, 17);
  std::vector<double> fourth;
  for (const auto& [w, wp] : batch.pairs) fourth.push_back(std::pow(wp - w, 4));
  const MeanEstimate est = mean_with_error(fourth);
  CHECK(std::abs(est.mean - mr.e4) < 3 * est.standard_error);
}

TEST_CASE("term1 matches hand-derived closed forms") {
  for (Family f : all_families()) {
    for (std::size_t n : kSizes) {
      if (n < min_size(f)) continue;
      const DecompositionTable t = builtin_table(f, n);
      for (double theta : {0.05, 0.4, 1.0, 2.2, 3.1}) {
        const ClassParameter p = ClassParameter::for_family(f, theta);
        if (t.a(p) >= 1.0) continue;
        const BoundReport r = stein_bound(t, p);
        const double c = std::cos(theta);
        CHECK(close(r.term1, closed_forms::term1(f, static_cast<double>(n), c), 1e-10));
        CHECK(close(r.term2, std::pow(closed_forms::term2_coefficient(f, static_cast<double>(n)) * (1 - c), 0.25),
                    1e-10));
      }
    }
  }
}

TEST_CASE("symplectic term1 against the published display") {
  for (std::size_t n : {2u, 7u, 20u})
    for (double theta : {0.3, 1.3, 2.9}) {
      const BoundReport r = real_bound(usp_table(n), ClassParameter::angle(theta));
      CHECK(close(r.term1, closed_forms::symplectic_term1_display(static_cast<double>(n), theta), 1e-12));
    }
}

TEST_CASE("moment identities on every built-in table") {
  for (Family f : all_families()) {
    for (std::size_t n : kSizes) {
      if (n < min_size(f)) continue;
      const DecompositionTable t = builtin_table(f, n);
      for (double theta : {0.01, 0.7, 1.9, kPi}) {
        const ClassParameter p = ClassParameter::for_family(f, theta);
        const double a = t.a(p);
        if (a > 2.0) continue;
        const MomentReport mr = moments(t, p);
        CHECK(mr.e2 == 2 * a);
        const auto mults = power_multiplicities(t, 4);
        const auto ratios = class_ratios(t, p);
        // The alternating sums cancel terms of order one, so compare absolutely.
        CHECK(std::abs(kth_moment(mults, ratios, 2, t.case_kind) - 2 * a) < 1e-12);
        CHECK(std::abs(kth_moment(mults, ratios, 4, t.case_kind) - mr.e4) < 1e-12);
        CHECK(mr.e4 >= 0.0);
        CHECK(mr.condvar >= 0.0);
        if (a < 1.0) {
          const BoundReport r = stein_bound(t, p);
          CHECK(close(r.term2, std::pow(mr.e4 / (kPi * a), 0.25), 1e-14));
        }
      }
    }
  }
}

TEST_CASE("all moments vanish at the identity") {
  for (Family f : all_families()) {
    const DecompositionTable t = builtin_table(f, 4);
    auto ratios = class_ratios(t, ClassParameter::angle(1.0));
    for (auto& [label, r] : ratios) r = 1.0;
    const auto mults = power_multiplicities(t, 4);
    for (int k : {1, 2, 3, 4}) CHECK(std::abs(kth_moment(mults, ratios, k, t.case_kind)) < 1e-12);
  }
}

TEST_CASE("moments shrink toward the identity") {
  for (Family f : all_families()) {
    const DecompositionTable t = builtin_table(f, 5);
    const MomentReport mr = moments(t, ClassParameter::for_family(f, 1e-4));
    CHECK(mr.e4 < 1e-6);
    CHECK(mr.condvar < 1e-6);
  }
}

TEST_CASE("limits") {
  for (Family f : all_families()) {
    for (std::size_t n : {2u, 3u, 5u, 10u, 50u, 100u}) {
      if (n < min_size(f)) continue;
      const DecompositionTable t = builtin_table(f, n);
      const LimitReport lim = limit_report(t);
      CHECK(lim.exact_limit <= lim.stated_bound * (1 + 1e-15));
      CHECK(close(lim.stated_bound, closed_forms::stated_limit(f, static_cast<double>(n)), 1e-15));
      CHECK(close(lim.term2_coefficient, closed_forms::term2_coefficient(f, static_cast<double>(n)), 1e-14));
      CHECK(close(lim.exact_limit, closed_forms::term1(f, static_cast<double>(n), 1.0), 1e-12));
      const BoundReport r = stein_bound(t, ClassParameter::for_family(f, 1e-6));
      CHECK(std::abs(r.term1 - lim.exact_limit) < 1e-8);
      REQUIRE(r.limit_term1.has_value());
      CHECK(*r.limit_term1 == lim.exact_limit);
    }
  }
}

TEST_CASE("bounds are invariant under reflecting the angle") {
  for (Family f : all_families()) {
    const DecompositionTable t = builtin_table(f, 6);
    for (double theta : {0.2, 1.1}) {
      const BoundReport r = stein_bound(t, ClassParameter::for_family(f, theta));
      for (double other : {-theta, 2 * kPi - theta}) {
        const BoundReport s = stein_bound(t, ClassParameter::for_family(f, other));
        CHECK(close(r.term1, s.term1, 1e-12));
        CHECK(close(r.term2, s.term2, 1e-12));
      }
    }
  }
}

TEST_CASE("rejected inputs") {
  const ClassParameter p = ClassParameter::angle(1.0);
  // a = 0 and a >= 1
  CHECK_THROWS_AS(real_bound(two_component(1.0, 0.5, 1.0), p), std::invalid_argument);
  CHECK_THROWS_AS(real_bound(two_component(-0.2, 0.5, 1.0), p), std::invalid_argument);
  CHECK_THROWS_AS(real_bound(two_component(0.7, 0.5, -1.0), p), std::invalid_argument);
  CHECK_THROWS_AS(real_bound(two_component(0.7, 1.5, 1.0), p), std::invalid_argument);
  CHECK_THROWS_AS(complex_bound(two_component(0.7, 0.5, 1.0), p), std::invalid_argument);
  CHECK_THROWS_AS(real_bound(u_table(3), p), std::invalid_argument);
  const DecompositionTable bad_trivial =
      fixed_table(CaseKind::Real, 0.7, 4.0, {{"trivial", 2.0, 1.0, 1.0, true}});
  CHECK_THROWS_AS(real_bound(bad_trivial, p), std::invalid_argument);
  CHECK_THROWS_AS(limit_report(two_component(0.7, 0.5, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(kth_moment({{{"trivial", 1.0}}}, {{"trivial", 1.0}}, 2, CaseKind::Real), std::invalid_argument);
  CHECK_THROWS_AS(power_multiplicities(usp_table(3), 5), std::invalid_argument);
  CHECK_THROWS_AS(ClassParameter::angle(2 * kPi), std::invalid_argument);
}
