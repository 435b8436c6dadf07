#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinchar/partitions.hpp"

namespace steinchar {

using cplx = std::complex<double>;

/// The seven models for which built-in decomposition tables exist.
/// The size parameter n means: USp(2n), SO(2n+1), O(2n), U(n), the sphere in
/// R^n, n x n COE matrices, and CSE matrices with n doubly degenerate
/// eigenvalues.
enum class Family { USp, SOOdd, OEven, U, Sphere, COE, CSE };

enum class CaseKind { Real, Complex };

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::vector<Family> all_families();
CaseKind case_kind_of(Family f);
/// Smallest supported n for the family.
std::size_t min_size(Family f);

/// One-parameter class used for the exchangeable pair: rotation by theta for
/// the matrix models, the double-coset coordinate x for the sphere.
class ClassParameter {
 public:
  enum class Kind { Angle, Cosine };

  /// Rotation by theta. Rejects theta congruent to 0 mod 2 pi.
  static ClassParameter angle(double theta);
  /// Sphere coordinate x in [-1, 1).
  static ClassParameter cosine(double x);
  /// The natural parameter for the family (theta, or x = cos(theta) for the
  /// sphere).
  static ClassParameter for_family(Family f, double theta);

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  /// u = 1 - cos(theta) (or 1 - x), computed without cancellation.
  double deficit() const { return deficit_; }

 private:
  ClassParameter(Kind k, double v, double u) : kind_(k), value_(v), deficit_(u) {}
  Kind kind_;
  double value_;
  double deficit_;
};

/// Power sums p_1, p_2 of the eigenvalues of a sampled element. For the sphere
/// p1 holds the coordinate x and p2 is unused.
struct PowerSums {
  cplx p1;
  cplx p2;
};

PowerSums power_sums(std::span<const cplx> eigenvalues);

struct IrrepComponent {
  std::string label;
  std::optional<Signature> signature;
  double multiplicity = 0.0;
  /// dim(phi) for groups, dim(H_phi) for symmetric spaces.
  double dim = 1.0;
  bool is_trivial = false;
  /// 1 - ratio at the class with 1 - cos(theta) = u.
  std::function<double(double)> deficit;
  /// chi^phi(g)/dim(phi) (or omega_phi(g)) at a sampled element.
  std::function<cplx(const PowerSums&)> sample_ratio;

  double ratio(const ClassParameter& p) const { return 1.0 - deficit(p.deficit()); }
};

struct DecompositionTable {
  std::optional<Family> family;
  std::size_t n = 0;
  CaseKind case_kind = CaseKind::Real;
  /// Characters of a group (true) or spherical functions of G/K (false).
  bool is_group = true;
  std::optional<double> alpha_param;
  IrrepComponent tau;
  std::vector<IrrepComponent> components;

  double a(const ClassParameter& p) const { return tau.deficit(p.deficit()); }
  /// dim(H_phi): dim^2 for a group, dim for a symmetric space.
  double hilbert_dim(const IrrepComponent& c) const { return is_group ? c.dim * c.dim : c.dim; }
  const IrrepComponent& trivial() const;
  /// W at a sampled element: sqrt(dim H_tau) * omega_tau in the real case,
  /// sqrt(dim H_tau / 2) * (omega_tau + conj) in the complex case.
  double w_value(const PowerSums& ps) const;
};

/// A table supplied by value, for a fixed class: component ratios are given
/// numbers. Used for user-supplied inputs to the bound evaluators.
struct FixedComponent {
  std::string label;
  double multiplicity = 0.0;
  double dim = 1.0;
  double ratio = 1.0;
  bool is_trivial = false;
};

DecompositionTable fixed_table(CaseKind kind, double tau_ratio, double tau_dim,
                               const std::vector<FixedComponent>& components);

/// Checks trivial multiplicity (1 real, 2 complex), nonnegative
/// multiplicities and ratios in [-1, 1] at the given class. Throws
/// std::invalid_argument on violation.
void validate_table(const DecompositionTable& table, const ClassParameter& p);

DecompositionTable usp_table(std::size_t n);
DecompositionTable so_odd_table(std::size_t n);
DecompositionTable o_even_table(std::size_t n);
DecompositionTable u_table(std::size_t n);

/// Built-in table for any family (dispatches to the module that owns it).
DecompositionTable builtin_table(Family f, std::size_t n);

/// s_lambda(x_1, ..., x_n) by the Jacobi-Trudi determinant, with negative
/// parts handled through shift_to_partition.
cplx schur_evaluate(const Signature& lambda, std::span<const cplx> x);

/// |chi^tau(x)^2 - sum_phi m_phi chi^phi(x)| for a real group family, or
/// |(chi^tau + conj)^2 - sum ...| for U(n). The eigenvalues are the full
/// multiset of the element; U(n) components are evaluated with
/// schur_evaluate.
double tensor_square_character_identity(Family f, std::size_t n,
                                        std::span<const cplx> eigenvalues);

/// |dim H_tau f^2 - sum_phi m_phi sqrt(dim H_phi) omega_phi| at one element,
/// with f = omega_tau (real case) or omega_tau + conj (complex case). For a
/// group this is the tensor-square character identity; for a symmetric space
/// it is the expansion of the square in spherical functions.
double square_expansion_residual(const DecompositionTable& table, const PowerSums& ps);

/// Eigenvalue multiset of the torus element with angles phi_1..phi_n for the
/// family: USp/O-even {e^{+-i phi_k}}, SO-odd additionally 1, U {e^{i phi_k}}.
std::vector<cplx> torus_eigenvalues(Family f, std::span<const double> angles);

}  // namespace steinchar
