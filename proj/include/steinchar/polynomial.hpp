#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "steinchar/partitions.hpp"
#include "steinchar/spherical.hpp"

namespace steinchar {

/// Sparse polynomial in n variables with exact rational coefficients.
class SparsePolynomial {
 public:
  using Exponent = std::vector<int>;

  explicit SparsePolynomial(std::size_t n_vars) : n_vars_(n_vars) {}

  /// Monomial symmetric function m_lambda in n variables.
  static SparsePolynomial monomial_symmetric(const Partition& lambda, std::size_t n_vars);

  std::size_t n_vars() const { return n_vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  void add(const Exponent& e, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial scaled(const Rational& c) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;

 private:
  std::size_t n_vars_;
  std::map<Exponent, Rational> terms_;
};

/// The operator (alpha/2) sum_i x_i^2 d_i^2 + sum_{i != j} x_i^2/(x_i - x_j) d_i
/// applied to a symmetric polynomial. Jack polynomials with parameter alpha
/// are its triangular eigenfunctions.
SparsePolynomial laplace_beltrami(const SparsePolynomial& f, const Rational& alpha);

/// Partitions of `size` with at most `max_rows` parts, in decreasing
/// lexicographic order.
std::vector<Partition> partitions_of(int size, std::size_t max_rows);

/// Jack polynomial P_lambda = m_lambda + lower terms, derived as the
/// eigenfunction of laplace_beltrami that is unitriangular in the monomial
/// basis.
SparsePolynomial jack_by_eigenfunction(const Partition& lambda, std::size_t n_vars, const Rational& alpha);

}  // namespace steinchar
