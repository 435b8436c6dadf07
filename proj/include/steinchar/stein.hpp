#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steinchar/characters.hpp"

namespace steinchar {

struct BoundReport {
  /// The class parameter as given: theta, or x for the sphere.
  double theta = 0.0;
  double a = 0.0;
  double term1 = 0.0;
  double term2 = 0.0;
  double total = 0.0;
  /// Limit of term1 as the class tends to the identity.
  std::optional<double> limit_term1;
  /// c with term2 ~ (c (1 - cos theta))^{1/4} near the identity.
  std::optional<double> limit_coeff_term2;
};

struct MomentReport {
  double e2 = 0.0;
  double e4 = 0.0;
  double condvar = 0.0;
};

/// Smallest a the evaluators accept. Deficits are computed without
/// cancellation, so tiny angles stay accurate.
inline constexpr double kMinDeficit = 1e-18;

BoundReport real_bound(const DecompositionTable& table, const ClassParameter& p);
BoundReport complex_bound(const DecompositionTable& table, const ClassParameter& p);
/// Dispatches on table.case_kind.
BoundReport stein_bound(const DecompositionTable& table, const ClassParameter& p);

/// Increment moments E(W'-W)^2, E(W'-W)^4 and Var(E[(W'-W)^2 | g]).
/// Accepts 0 < a <= 2 since small groups reach a > 1 at theta = pi.
MomentReport moments(const DecompositionTable& table, const ClassParameter& p);

using MultiplicityMap = std::map<std::string, double>;

/// Alternating sum over r of binom(k, r) sum_phi m_phi(tau^r) m_phi(tau^{k-r})
/// ratio_phi, with the 2^{-k/2} prefactor in the complex case. A component
/// missing from either map contributes nothing.
double kth_moment(const std::vector<MultiplicityMap>& mult_tables,
                  const std::map<std::string, double>& ratios, int k, CaseKind kind);

/// Keys used by power_multiplicities and class_ratios.
inline const std::string kTauKey = "tau";
inline const std::string kTauConjKey = "conj(tau)";

/// Multiplicities of the components of tau^r (or (tau + conj tau)^r) for
/// r = 0..k, k <= 4. Only components that pair with a lower power are
/// listed: tau^3 keeps tau (and its conjugate), tau^4 keeps the trivial one,
/// both carrying sum_phi m_phi(tau^2)^2.
std::vector<MultiplicityMap> power_multiplicities(const DecompositionTable& table, int k);

/// Ratio of every key used by power_multiplicities at the class.
std::map<std::string, double> class_ratios(const DecompositionTable& table, const ClassParameter& p);

struct LimitReport {
  Family family;
  std::size_t n = 0;
  /// The bound as stated for the family (never below the exact limit).
  double stated_bound = 0.0;
  /// Closed form of lim term1 as theta -> 0.
  double exact_limit = 0.0;
  /// Same limit by extrapolation of the evaluator.
  double extrapolated_limit = 0.0;
  /// Closed form and extrapolation of the term2 coefficient.
  double term2_coefficient = 0.0;
  double extrapolated_term2_coefficient = 0.0;
};

double stated_bound(Family f, std::size_t n);
double exact_limit_closed_form(Family f, std::size_t n);
double term2_coefficient_closed_form(Family f, std::size_t n);

/// Closed-form limits checked against extrapolation (relative 1e-6);
/// throws std::logic_error if they disagree.
LimitReport limit_report(const DecompositionTable& table);

}  // namespace steinchar
