#include "steinchar/spherical.hpp"

#include <cmath>
#include <stdexcept>

namespace steinchar {

double gegenbauer(int l, double rho, double x) {
  if (l < 0) throw std::invalid_argument("gegenbauer degree must be nonnegative");
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * rho * x;
  for (int k = 2; k <= l; ++k) {
    const double next = (2.0 * x * (k + rho - 1.0) * cur - (k + 2.0 * rho - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double sphere_harmonic_dim(int l, std::size_t n) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required for sphere");
  if (l < 0) throw std::invalid_argument("degree must be nonnegative");
  if (l == 0) return 1.0;
  // (2l+n-2)(n+l-3)! / ((n-2)! l!)
  const double nn = static_cast<double>(n);
  double d = (2.0 * l + nn - 2.0) / l;
  for (int j = 1; j <= l - 1; ++j) d *= (nn - 2.0 + j) / j;
  return d;
}

double sphere_spherical_function(int l, std::size_t n, double x) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required for sphere");
  if (n == 2) {
    double prev = 1.0, cur = x;
    if (l == 0) return prev;
    for (int k = 2; k <= l; ++k) {
      const double next = 2.0 * x * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // l! (n-3)! / (l+n-3)!
  double norm = 1.0;
  for (int j = 1; j <= l; ++j) norm *= static_cast<double>(j) / (static_cast<double>(n) - 3.0 + j);
  return norm * gegenbauer(l, (static_cast<double>(n) - 2.0) / 2.0, x);
}

DecompositionTable sphere_table(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required for sphere");
  const double nn = static_cast<double>(n);
  DecompositionTable t;
  t.family = Family::Sphere;
  t.n = n;
  t.case_kind = CaseKind::Real;
  t.is_group = false;

  t.tau.label = "l=1";
  t.tau.multiplicity = 1.0;
  t.tau.dim = sphere_harmonic_dim(1, n);
  t.tau.deficit = [](double u) { return u; };
  t.tau.sample_ratio = [](const PowerSums& ps) { return cplx(ps.p1.real(), 0.0); };

  // omega_1^2 = (1/n) omega_0 + ((n-1)/n) omega_2.
  const double h_tau = t.tau.dim;
  auto multiplicity = [h_tau](double coeff, double h_phi) { return coeff * std::sqrt(h_tau * h_tau / h_phi); };

  IrrepComponent triv;
  triv.label = "l=0";
  triv.dim = 1.0;
  triv.is_trivial = true;
  triv.multiplicity = multiplicity(1.0 / nn, 1.0);
  triv.deficit = [](double) { return 0.0; };
  triv.sample_ratio = [](const PowerSums&) { return cplx(1.0, 0.0); };
  t.components.push_back(triv);

  IrrepComponent two;
  two.label = "l=2";
  two.dim = sphere_harmonic_dim(2, n);
  two.multiplicity = multiplicity((nn - 1.0) / nn, two.dim);
  two.deficit = [nn](double u) { return nn * u * (2.0 - u) / (nn - 1.0); };
  two.sample_ratio = [n](const PowerSums& ps) {
    return cplx(sphere_spherical_function(2, n, ps.p1.real()), 0.0);
  };
  t.components.push_back(two);
  return t;
}

Rational jack_principal_specialization(const Partition& lambda, const JackContext& ctx) {
  if (lambda.rows() > ctx.n_vars) throw std::invalid_argument("partition has more rows than variables");
  const Rational n(static_cast<long long>(ctx.n_vars));
  Rational value(1);
  for (const Box& b : boxes(lambda)) {
    const auto& s = b.stats;
    value *= (n + ctx.alpha * s.coarm - s.coleg) / (ctx.alpha * s.arm + s.leg + 1);
  }
  return value;
}

Rational jack_principal_specialization(const Signature& lambda, const JackContext& ctx) {
  return jack_principal_specialization(shift_to_partition(lambda, ctx.n_vars).partition, ctx);
}

Rational jack_dimension(const Partition& lambda, const JackContext& ctx) {
  if (lambda.rows() > ctx.n_vars) throw std::invalid_argument("partition has more rows than variables");
  const Rational n(static_cast<long long>(ctx.n_vars));
  const bool coe = ctx.alpha == Rational(2);
  const bool cse = ctx.alpha == Rational(1, 2);
  if (!coe && !cse) throw std::invalid_argument("dimension formula available for alpha = 2 or 1/2 only");
  Rational value(1);
  for (const Box& b : boxes(lambda)) {
    const Rational a(b.stats.arm), l(b.stats.leg), ap(b.stats.coarm), lp(b.stats.coleg);
    if (coe) {
      value *= (n + 1 + 2 * ap - lp) * (n + 2 * ap - lp) / ((2 * a + l + 2) * (2 * a + l + 1));
    } else {
      value *= (n + ap / 2 - lp) * (2 * n - 1 + ap - 2 * lp) / ((a / 2 + l + 1) * (a + 2 * l + 1));
    }
  }
  return value;
}

Rational jack_dimension(const Signature& lambda, const JackContext& ctx) {
  return jack_dimension(shift_to_partition(lambda, ctx.n_vars).partition, ctx);
}

Rational jack_p2_coefficient(const JackContext& ctx) { return Rational(2) / (ctx.alpha + 1); }

Rational adjoint_pieri_constant(const JackContext& ctx) {
  const std::size_t n = ctx.n_vars;
  if (n < 2) throw std::invalid_argument("n ≥ 2 required");
  std::vector<int> hook(n - 1, 1);
  hook.front() = 2;
  // Specialize P_(1) P_(1^{n-1}) = P_(2,1^{n-2}) + c' P_(1^n) at 1^n; e_k(1^n) = C(n, k).
  const Rational nn(static_cast<long long>(n));
  return nn * nn - jack_principal_specialization(Partition(hook), ctx);
}

namespace {

std::vector<int> edge_signature(std::size_t n, std::vector<int> head, std::vector<int> tail) {
  std::vector<int> parts(n, 0);
  std::copy(head.begin(), head.end(), parts.begin());
  std::copy(tail.rbegin(), tail.rend(), parts.rbegin());
  return parts;
}

enum class JackLabel { Trivial, Tau, Two, OneOne, Adjoint, TwoDual, OneOneDual };

JackLabel classify(const Signature& phi, std::size_t n) {
  if (phi.length() != n) throw std::invalid_argument("signature length must equal n");
  if (phi == Signature(std::vector<int>(n, 0))) return JackLabel::Trivial;
  if (phi == Signature(edge_signature(n, {1}, {}))) return JackLabel::Tau;
  if (phi == Signature(edge_signature(n, {2}, {}))) return JackLabel::Two;
  if (phi == Signature(edge_signature(n, {1, 1}, {}))) return JackLabel::OneOne;
  if (phi == Signature(edge_signature(n, {1}, {-1}))) return JackLabel::Adjoint;
  if (phi == Signature(edge_signature(n, {}, {-2}))) return JackLabel::TwoDual;
  if (phi == Signature(edge_signature(n, {}, {-1, -1}))) return JackLabel::OneOneDual;
  throw std::invalid_argument("no closed form for Jack label " + phi.to_string());
}

struct JackConstants {
  double n, c, c_adj, p2_one, e2_one, adj_one;
};

JackConstants constants(const JackContext& ctx) {
  JackConstants k{};
  k.n = static_cast<double>(ctx.n_vars);
  k.c = to_double(jack_p2_coefficient(ctx));
  k.c_adj = to_double(adjoint_pieri_constant(ctx));
  k.e2_one = k.n * (k.n - 1.0) / 2.0;
  k.p2_one = k.n + k.c * k.e2_one;
  k.adj_one = k.n * k.n - k.c_adj;
  return k;
}

/// 1 - omega_phi at the class (1^{n-2}, e^{i theta}, e^{-i theta}), with
/// u = 1 - cos(theta). Uses n - p1 = 2u, n - p2 = 4u(2-u) and
/// C(n,2) - e2 = 2nu - 4u.
std::function<double(double)> jack_deficit(JackLabel label, const JackConstants& k) {
  switch (label) {
    case JackLabel::Trivial: return [](double) { return 0.0; };
    case JackLabel::Tau: return [k](double u) { return 2.0 * u / k.n; };
    case JackLabel::Two:
    case JackLabel::TwoDual:
      return [k](double u) { return (4.0 * u * (2.0 - u) + k.c * (2.0 * k.n * u - 4.0 * u)) / k.p2_one; };
    case JackLabel::OneOne:
    case JackLabel::OneOneDual: return [k](double u) { return (2.0 * k.n * u - 4.0 * u) / k.e2_one; };
    case JackLabel::Adjoint: return [k](double u) { return 4.0 * u * (k.n - u) / k.adj_one; };
  }
  throw std::logic_error("unreachable");
}

cplx jack_value(JackLabel label, const JackConstants& k, const PowerSums& ps) {
  const cplx e2 = 0.5 * (ps.p1 * ps.p1 - ps.p2);
  switch (label) {
    case JackLabel::Trivial: return 1.0;
    case JackLabel::Tau: return ps.p1 / k.n;
    case JackLabel::Two: return (ps.p2 + k.c * e2) / k.p2_one;
    case JackLabel::TwoDual: return std::conj((ps.p2 + k.c * e2) / k.p2_one);
    case JackLabel::OneOne: return e2 / k.e2_one;
    case JackLabel::OneOneDual: return std::conj(e2 / k.e2_one);
    case JackLabel::Adjoint: return (std::norm(ps.p1) - k.c_adj) / k.adj_one;
  }
  throw std::logic_error("unreachable");
}

DecompositionTable circular_table(Family family, const JackContext& ctx) {
  const std::size_t n = ctx.n_vars;
  if (n < 2) throw std::invalid_argument("n ≥ 2 required for " + family_name(family));
  const JackConstants k = constants(ctx);

  DecompositionTable t;
  t.family = family;
  t.n = n;
  t.case_kind = CaseKind::Complex;
  t.is_group = false;
  t.alpha_param = to_double(ctx.alpha);

  const Signature tau_sig(edge_signature(n, {1}, {}));
  t.tau.signature = tau_sig;
  t.tau.label = tau_sig.to_string();
  t.tau.multiplicity = 1.0;
  t.tau.dim = to_double(jack_dimension(tau_sig, ctx));
  t.tau.deficit = jack_deficit(JackLabel::Tau, k);
  t.tau.sample_ratio = [k](const PowerSums& ps) { return jack_value(JackLabel::Tau, k, ps); };

  for (const auto& term : p_square_expansion(ctx)) {
    const JackLabel label = classify(term.phi, n);
    IrrepComponent c;
    c.signature = term.phi;
    c.label = term.is_trivial ? "trivial" : term.phi.to_string();
    c.is_trivial = term.is_trivial;
    c.dim = to_double(jack_dimension(term.phi, ctx));
    c.multiplicity = m_from_p_expansion(to_double(term.coeff), term.phi, t.tau.dim, ctx);
    c.deficit = jack_deficit(label, k);
    c.sample_ratio = [label, k](const PowerSums& ps) { return jack_value(label, k, ps); };
    t.components.push_back(std::move(c));
  }
  return t;
}

}  // namespace

std::vector<PExpansionTerm> p_square_expansion(const JackContext& ctx) {
  const std::size_t n = ctx.n_vars;
  const Rational one_one = 2 * ctx.alpha / (ctx.alpha + 1);  // 2 - 2/(alpha+1)
  const Rational constant = 2 * adjoint_pieri_constant(ctx);
  return {
      {Signature(std::vector<int>(n, 0)), constant, true},
      {Signature(edge_signature(n, {2}, {})), Rational(1), false},
      {Signature(edge_signature(n, {1, 1}, {})), one_one, false},
      {Signature(edge_signature(n, {1}, {-1})), Rational(2), false},
      {Signature(edge_signature(n, {}, {-2})), Rational(1), false},
      {Signature(edge_signature(n, {}, {-1, -1})), one_one, false},
  };
}

double m_from_p_expansion(double coeff, const Signature& phi, double tau_dim, const JackContext& ctx) {
  const double dim_phi = to_double(jack_dimension(phi, ctx));
  if (!(dim_phi > 0.0)) throw std::logic_error("zero dimension for " + phi.to_string());
  const double p_phi = to_double(jack_principal_specialization(phi, ctx));
  const double p_one = static_cast<double>(ctx.n_vars);
  return coeff * p_phi / (p_one * p_one) * std::sqrt(tau_dim * tau_dim / dim_phi);
}

cplx jack_spherical_value(const Signature& phi, const JackContext& ctx, const PowerSums& ps) {
  return jack_value(classify(phi, ctx.n_vars), constants(ctx), ps);
}

DecompositionTable coe_table(std::size_t n) { return circular_table(Family::COE, JackContext::coe(n)); }

DecompositionTable cse_table(std::size_t n) { return circular_table(Family::CSE, JackContext::cse(n)); }

}  // namespace steinchar
