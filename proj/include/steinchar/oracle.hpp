#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "steinchar/characters.hpp"

namespace steinchar {

struct GramSchmidtResult {
  /// c in P_(2) = m_(2) + c m_(1,1).
  double coefficient = 0.0;
  /// |change| when the quadrature grid is doubled.
  double grid_change = 0.0;
  int grid_points = 0;
};

/// Orthogonalizes m_(2) against m_(1,1) under the torus inner product with
/// weight prod |x_i - x_j|^beta, by trapezoidal quadrature with Richardson
/// extrapolation in the grid spacing. n_vars in {2, 3}, beta in {1, 2, 4}.
/// Throws std::runtime_error if doubling the grid moves c by more than 1e-6.
GramSchmidtResult jack_gram_schmidt(std::size_t n_vars, int beta, int grid_points = 256);

enum class Ensemble { Unitary, COE, CSE };

std::string ensemble_name(Ensemble e);

struct PieriTerm {
  std::string label;
  double coefficient = 0.0;
};

struct PieriFit {
  std::vector<PieriTerm> terms;
  /// Root-mean-square residual of the fit.
  double residual = 0.0;
  double condition_number = 0.0;
  /// Largest imaginary part among the fitted coefficients.
  double max_imaginary = 0.0;
};

/// Least-squares expansion of (P_(1) + conj)^2 in the basis
/// {1, P_(2), P_(1,1), P_(1,0..0,-1), conj P_(2), conj P_(1,1)} at random torus
/// points. The basis is built independently of the closed-form tables, from
/// the Laplace-Beltrami eigenfunctions. Throws std::runtime_error when the
/// condition number exceeds 1e8.
PieriFit pieri_least_squares(std::size_t n_vars, Ensemble ensemble, std::size_t points, std::uint64_t seed);

struct MultiplicityEstimate {
  std::string label;
  double estimate = 0.0;
  double standard_error = 0.0;
  /// Imaginary part of the raw estimate; zero up to noise.
  double imaginary = 0.0;
  std::size_t count = 0;
};

/// sqrt(dim H_phi dim H_tau^r) E[f^r conj(omega_phi)], with f = omega_tau
/// (real case) or omega_tau + conj (complex case), over random elements.
/// phi_label names a component of the built-in table or "tau". Jackknife
/// standard error.
MultiplicityEstimate monte_carlo_multiplicity(Family f, std::size_t n, const std::string& phi_label, int r,
                                              std::size_t count, std::uint64_t seed);

struct LimitEstimate {
  double value = 0.0;
  double error = 0.0;
};

/// Limit of f(theta) as theta -> 0+ by polynomial extrapolation in
/// 1 - cos(theta) over a geometric ladder. Throws std::runtime_error when
/// the last two extrapolants differ by more than 1e-6 relative.
LimitEstimate numeric_limit(const std::function<double(double)>& f,
                            const std::vector<double>& thetas = {1e-2, 1e-3, 1e-4});

}  // namespace steinchar
