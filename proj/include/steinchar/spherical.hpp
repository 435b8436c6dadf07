#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "steinchar/characters.hpp"
#include "steinchar/partitions.hpp"

namespace steinchar {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Gegenbauer polynomial C_l^rho(x) by the three-term recurrence.
double gegenbauer(int l, double rho, double x);

/// Dimension of the degree-l spherical harmonics on the sphere in R^n.
double sphere_harmonic_dim(int l, std::size_t n);

/// Zonal spherical function omega_l(x) of SO(n)/SO(n-1), normalized so that
/// omega_l(1) = 1. For n = 2 (the circle) this is the Chebyshev polynomial.
double sphere_spherical_function(int l, std::size_t n, double x);

/// Real-case table for W = sqrt(n) x on the sphere in R^n; the class
/// parameter is the coordinate x.
DecompositionTable sphere_table(std::size_t n);

/// Jack parameter and number of variables of a circular ensemble.
struct JackContext {
  Rational alpha;
  std::size_t n_vars = 0;

  static JackContext coe(std::size_t n) { return {Rational(2), n}; }
  static JackContext cse(std::size_t n) { return {Rational(1, 2), n}; }
};

/// P_lambda(1, ..., 1; alpha) as a product over the boxes of lambda.
Rational jack_principal_specialization(const Partition& lambda, const JackContext& ctx);
/// Same for a signature, via the shift convention (the monomial prefactor
/// evaluates to 1).
Rational jack_principal_specialization(const Signature& lambda, const JackContext& ctx);

/// dim(H_lambda) for alpha = 2 (COE) or alpha = 1/2 (CSE).
Rational jack_dimension(const Partition& lambda, const JackContext& ctx);
Rational jack_dimension(const Signature& lambda, const JackContext& ctx);

/// Coefficient c in P_(2) = m_(2) + c m_(1,1), i.e. 2/(alpha+1).
Rational jack_p2_coefficient(const JackContext& ctx);

/// Constant c' in P_(1) P_(1^{n-1}) = P_(2,1^{n-2}) + c' P_(1^n), obtained by
/// principal specialization of both sides.
Rational adjoint_pieri_constant(const JackContext& ctx);

struct PExpansionTerm {
  Signature phi;
  Rational coeff;
  bool is_trivial = false;
};

/// (P_(1) + conj(P_(1)))^2 expanded in Jack polynomials P_phi.
std::vector<PExpansionTerm> p_square_expansion(const JackContext& ctx);

/// Converts the coefficient of P_phi in the expansion of (P_(1) + conj)^2 to
/// the multiplicity m_phi[(tau + conj tau)^2].
double m_from_p_expansion(double coeff, const Signature& phi, double tau_dim, const JackContext& ctx);

/// Normalized Jack spherical function omega_phi at a sampled element, from
/// the eigenvalue power sums. Supports the labels of p_square_expansion and
/// (1).
cplx jack_spherical_value(const Signature& phi, const JackContext& ctx, const PowerSums& ps);

DecompositionTable coe_table(std::size_t n);
DecompositionTable cse_table(std::size_t n);

}  // namespace steinchar
