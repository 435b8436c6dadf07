#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "steinchar/oracle.hpp"
#include "steinchar/spherical.hpp"
#include "steinchar/stein.hpp"

using namespace steinchar;

TEST_CASE("Gram-Schmidt recovers the second-degree Jack coefficient") {
  for (std::size_t n : {2u, 3u}) {
    for (const auto& [beta, expected] : std::vector<std::pair<int, double>>{{1, 2.0 / 3}, {2, 1.0}, {4, 4.0 / 3}}) {
      const GramSchmidtResult r = jack_gram_schmidt(n, beta);
      CHECK(std::abs(r.coefficient - expected) < 1e-6);
      CHECK(r.grid_change <= 1e-6);
    }
  }
  CHECK_THROWS_AS(jack_gram_schmidt(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(jack_gram_schmidt(2, 3), std::invalid_argument);
}

TEST_CASE("least-squares expansion agrees with the derived coefficients") {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (Ensemble e : {Ensemble::Unitary, Ensemble::COE, Ensemble::CSE}) {
      const PieriFit fit = pieri_least_squares(n, e, 200, 3);
      const Rational alpha = e == Ensemble::COE ? Rational(2) : e == Ensemble::CSE ? Rational(1, 2) : Rational(1);
      const auto expected = p_square_expansion(JackContext{alpha, n});
      REQUIRE(fit.terms.size() == expected.size());
      CHECK(fit.residual < 1e-8);
      CHECK(fit.max_imaginary < 1e-8);
      CHECK(fit.condition_number < 1e8);
      CHECK(fit.terms[0].label == "trivial");
      CHECK(fit.terms[3].label == "(1,0,...,0,-1)");
      INFO(ensemble_name(e), " n=", n);
      for (std::size_t i = 0; i < fit.terms.size(); ++i) {
        CHECK(fit.terms[i].coefficient == doctest::Approx(to_double(expected[i].coeff)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("Monte Carlo multiplicities agree with the built-in tables") {
  for (Family f : all_families()) {
    const std::size_t n = 3;
    const DecompositionTable t = builtin_table(f, n);
    for (const auto& c : t.components) {
      const MultiplicityEstimate est = monte_carlo_multiplicity(f, n, c.label, 2, 20000, 8);
      INFO(family_name(f), " ", c.label, " ", est.estimate, " +- ", est.standard_error);
      CHECK(std::abs(est.estimate - c.multiplicity) <= 4 * est.standard_error + 1e-12);
    }
    const MultiplicityEstimate tau = monte_carlo_multiplicity(f, n, "tau", 1, 20000, 9);
    CHECK(std::abs(tau.estimate - 1.0) <= 4 * tau.standard_error + 1e-12);
  }
  CHECK_THROWS_AS(monte_carlo_multiplicity(Family::USp, 3, "nope", 2, 100, 1), std::invalid_argument);
}

TEST_CASE("numeric limits") {
  const LimitEstimate s = numeric_limit([](double t) { return std::sin(t) / t; });
  CHECK(s.value == doctest::Approx(1.0).epsilon(1e-10));
  const LimitEstimate c = numeric_limit([](double t) { return (2 + t * t) / (1 + std::cos(t)); });
  CHECK(c.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(numeric_limit([](double t) { return std::sin(1 / t); }), std::runtime_error);

  const DecompositionTable t = usp_table(5);
  const LimitEstimate lim =
      numeric_limit([&](double th) { return real_bound(t, ClassParameter::angle(th)).term1; });
  CHECK(lim.value == doctest::Approx(exact_limit_closed_form(Family::USp, 5)).epsilon(1e-10));
}

TEST_CASE("further limit and multiplicity examples") {
  CHECK(numeric_limit([](double t) { return std::cos(t); }).value == doctest::Approx(1.0).epsilon(1e-12));
  const DecompositionTable u = u_table(4);
  const LimitEstimate lim = numeric_limit([&](double th) { return complex_bound(u, ClassParameter::angle(th)).term1; });
  CHECK(std::abs(lim.value - 2 * std::sqrt(18.0) / 15) < 1e-8);

  // COE n = 4, the (1,1) component.
  const DecompositionTable coe = coe_table(4);
  int found = 0;
  for (const auto& c : coe.components) {
    if (c.label != "(1,1,0,0)") continue;
    ++found;
    const MultiplicityEstimate est = monte_carlo_multiplicity(Family::COE, 4, c.label, 2, 40000, 12);
    CHECK(std::abs(est.estimate - c.multiplicity) <= 3 * est.standard_error);
  }
  CHECK(found == 1);
}

TEST_CASE("Monte Carlo standard error scales as count^{-1/2}") {
  const MultiplicityEstimate small = monte_carlo_multiplicity(Family::SOOdd, 3, "trivial", 2, 10000, 2);
  const MultiplicityEstimate large = monte_carlo_multiplicity(Family::SOOdd, 3, "trivial", 2, 40000, 3);
  const double ratio = small.standard_error / large.standard_error;
  CHECK(ratio > 2 * 0.8);
  CHECK(ratio < 2 * 1.2);
}
