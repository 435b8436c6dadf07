#include "steinchar/characters.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steinchar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PowerSums torus_power_sums_identity(Family f, std::size_t n) {
  const double nn = static_cast<double>(n);
  switch (f) {
    case Family::USp:
    case Family::OEven: return {2.0 * nn, 2.0 * nn};
    case Family::SOOdd: return {2.0 * nn + 1.0, 2.0 * nn + 1.0};
    default: return {nn, nn};
  }
}

/// Component whose character is given as a function of power sums; dim is the
/// character at the identity.
IrrepComponent group_component(std::string label, double multiplicity,
                               const PowerSums& identity,
                               std::function<cplx(const PowerSums&)> character,
                               std::function<double(double)> deficit_numerator,
                               bool trivial = false) {
  IrrepComponent c;
  c.label = std::move(label);
  c.multiplicity = multiplicity;
  c.dim = character(identity).real();
  c.is_trivial = trivial;
  const double dim = c.dim;
  c.deficit = [dim, num = std::move(deficit_numerator)](double u) { return num(u) / dim; };
  c.sample_ratio = [dim, chi = std::move(character)](const PowerSums& ps) { return chi(ps) / dim; };
  return c;
}

IrrepComponent trivial_component(double multiplicity) {
  IrrepComponent c;
  c.label = "trivial";
  c.multiplicity = multiplicity;
  c.dim = 1.0;
  c.is_trivial = true;
  c.deficit = [](double) { return 0.0; };
  c.sample_ratio = [](const PowerSums&) { return cplx(1.0, 0.0); };
  return c;
}

void require_size(Family f, std::size_t n) {
  if (n < min_size(f)) {
    throw std::invalid_argument("n ≥ " + std::to_string(min_size(f)) + " required for " +
                                family_name(f));
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::USp: return "usp";
    case Family::SOOdd: return "so-odd";
    case Family::OEven: return "o-even";
    case Family::U: return "u";
    case Family::Sphere: return "sphere";
    case Family::COE: return "coe";
    case Family::CSE: return "cse";
  }
  throw std::logic_error("unknown family");
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<Family> all_families() {
  return {Family::USp, Family::SOOdd, Family::OEven, Family::U,
          Family::Sphere, Family::COE, Family::CSE};
}

CaseKind case_kind_of(Family f) {
  switch (f) {
    case Family::U:
    case Family::COE:
    case Family::CSE: return CaseKind::Complex;
    default: return CaseKind::Real;
  }
}

std::size_t min_size(Family) { return 2; }

ClassParameter ClassParameter::angle(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  const double r = std::remainder(theta, kTwoPi);
  const double s = std::sin(0.5 * r);
  const double u = 2.0 * s * s;
  if (!(u > 0.0)) throw std::invalid_argument("theta must not be the identity class (theta = 0)");
  return ClassParameter(Kind::Angle, theta, u);
}

ClassParameter ClassParameter::cosine(double x) {
  if (!(x >= -1.0 && x < 1.0)) throw std::invalid_argument("x must lie in [-1, 1)");
  return ClassParameter(Kind::Cosine, x, 1.0 - x);
}

ClassParameter ClassParameter::for_family(Family f, double theta) {
  const ClassParameter angular = angle(theta);
  if (f != Family::Sphere) return angular;
  return ClassParameter(Kind::Cosine, std::cos(theta), angular.deficit());
}

PowerSums power_sums(std::span<const cplx> eigenvalues) {
  PowerSums ps{0.0, 0.0};
  for (const cplx& x : eigenvalues) {
    ps.p1 += x;
    ps.p2 += x * x;
  }
  return ps;
}

const IrrepComponent& DecompositionTable::trivial() const {
  for (const auto& c : components) {
    if (c.is_trivial) return c;
  }
  throw std::logic_error("table has no trivial component");
}

double DecompositionTable::w_value(const PowerSums& ps) const {
  const cplx omega = tau.sample_ratio(ps);
  const double h = hilbert_dim(tau);
  if (case_kind == CaseKind::Real) return std::sqrt(h) * omega.real();
  return std::sqrt(h / 2.0) * 2.0 * omega.real();
}

DecompositionTable fixed_table(CaseKind kind, double tau_ratio, double tau_dim,
                               const std::vector<FixedComponent>& components) {
  DecompositionTable t;
  t.case_kind = kind;
  t.tau.label = "tau";
  t.tau.multiplicity = 1.0;
  t.tau.dim = tau_dim;
  t.tau.deficit = [d = 1.0 - tau_ratio](double) { return d; };
  for (const auto& fc : components) {
    IrrepComponent c;
    c.label = fc.label;
    c.multiplicity = fc.multiplicity;
    c.dim = fc.dim;
    c.is_trivial = fc.is_trivial;
    c.deficit = [d = 1.0 - fc.ratio](double) { return d; };
    c.sample_ratio = [r = fc.ratio](const PowerSums&) { return cplx(r, 0.0); };
    t.components.push_back(std::move(c));
  }
  return t;
}

void validate_table(const DecompositionTable& table, const ClassParameter& p) {
  int trivial_count = 0;
  const double want = table.case_kind == CaseKind::Real ? 1.0 : 2.0;
  for (const auto& c : table.components) {
    if (!(c.multiplicity >= 0.0)) {
      throw std::invalid_argument("negative multiplicity for component " + c.label);
    }
    if (!(c.dim > 0.0)) throw std::invalid_argument("nonpositive dimension for component " + c.label);
    const double r = c.ratio(p);
    if (!(std::abs(r) <= 1.0 + 1e-12)) {
      throw std::invalid_argument("ratio outside [-1, 1] for component " + c.label);
    }
    if (c.is_trivial) {
      ++trivial_count;
      if (std::abs(c.multiplicity - want) > 1e-9) {
        throw std::invalid_argument("trivial multiplicity must be " + std::to_string(static_cast<int>(want)));
      }
    }
  }
  if (trivial_count != 1) throw std::invalid_argument("table must contain exactly one trivial component");
}

DecompositionTable usp_table(std::size_t n) {
  require_size(Family::USp, n);
  const double nn = static_cast<double>(n);
  const PowerSums id = torus_power_sums_identity(Family::USp, n);
  DecompositionTable t;
  t.family = Family::USp;
  t.n = n;
  t.case_kind = CaseKind::Real;
  t.tau = group_component("(1)", 1.0, id, [](const PowerSums& ps) { return ps.p1; },
                          [](double u) { return 2.0 * u; });
  t.components.push_back(trivial_component(1.0));
  t.components.push_back(group_component(
      "(2)", 1.0, id, [](const PowerSums& ps) { return 0.5 * ps.p1 * ps.p1 + 0.5 * ps.p2; },
      [nn](double u) { return 4.0 * nn * u + 4.0 * u - 4.0 * u * u; }));
  t.components.push_back(group_component(
      "(1,1)", 1.0, id,
      [](const PowerSums& ps) { return 0.5 * ps.p1 * ps.p1 - 0.5 * ps.p2 - 1.0; },
      [nn](double u) { return 4.0 * u * (nn - 1.0); }));
  return t;
}

DecompositionTable so_odd_table(std::size_t n) {
  require_size(Family::SOOdd, n);
  const double nn = static_cast<double>(n);
  const PowerSums id = torus_power_sums_identity(Family::SOOdd, n);
  // Torus characters are usually written in s = sum x_i + x_i^{-1} and
  // q = sum x_i^2 + x_i^{-2}; the fixed eigenvalue 1 contributes 1 to p1, p2.
  DecompositionTable t;
  t.family = Family::SOOdd;
  t.n = n;
  t.case_kind = CaseKind::Real;
  t.tau = group_component("(1)", 1.0, id, [](const PowerSums& ps) { return ps.p1; },
                          [](double u) { return 2.0 * u; });
  t.components.push_back(trivial_component(1.0));
  t.components.push_back(group_component(
      "(2)", 1.0, id,
      [](const PowerSums& ps) {
        const cplx s = ps.p1 - 1.0, q = ps.p2 - 1.0;
        return 0.5 * s * s + 0.5 * q + s;
      },
      [nn](double u) { return 4.0 * nn * u + 6.0 * u - 4.0 * u * u; }));
  t.components.push_back(group_component(
      "(1,1)", 1.0, id,
      [](const PowerSums& ps) {
        const cplx s = ps.p1 - 1.0, q = ps.p2 - 1.0;
        return 0.5 * s * s - 0.5 * q + s;
      },
      [nn](double u) { return 4.0 * nn * u - 2.0 * u; }));
  return t;
}

DecompositionTable o_even_table(std::size_t n) {
  require_size(Family::OEven, n);
  const double nn = static_cast<double>(n);
  const PowerSums id = torus_power_sums_identity(Family::OEven, n);
  DecompositionTable t;
  t.family = Family::OEven;
  t.n = n;
  t.case_kind = CaseKind::Real;
  t.tau = group_component("(1)", 1.0, id, [](const PowerSums& ps) { return ps.p1; },
                          [](double u) { return 2.0 * u; });
  t.components.push_back(trivial_component(1.0));
  t.components.push_back(group_component(
      "(1,1)", 1.0, id, [](const PowerSums& ps) { return 0.5 * ps.p1 * ps.p1 - 0.5 * ps.p2; },
      [nn](double u) { return 4.0 * nn * u - 4.0 * u; }));
  t.components.push_back(group_component(
      "(2)", 1.0, id,
      [](const PowerSums& ps) { return 0.5 * ps.p1 * ps.p1 + 0.5 * ps.p2 - 1.0; },
      [nn](double u) { return 4.0 * nn * u + 4.0 * u - 4.0 * u * u; }));
  return t;
}

DecompositionTable u_table(std::size_t n) {
  require_size(Family::U, n);
  const double nn = static_cast<double>(n);
  const PowerSums id = torus_power_sums_identity(Family::U, n);
  const auto h2 = [](const PowerSums& ps) { return 0.5 * (ps.p1 * ps.p1 + ps.p2); };
  const auto e2 = [](const PowerSums& ps) { return 0.5 * (ps.p1 * ps.p1 - ps.p2); };
  const auto h2_num = [nn](double u) { return 2.0 * nn * u + 4.0 * u - 4.0 * u * u; };
  const auto e2_num = [nn](double u) { return 2.0 * nn * u - 4.0 * u; };

  auto with_sig = [](IrrepComponent c, std::vector<int> parts) {
    c.signature = Signature(std::move(parts));
    c.label = c.signature->to_string();
    return c;
  };
  auto sig = [n](std::vector<int> head, std::vector<int> tail) {
    std::vector<int> parts(n, 0);
    std::copy(head.begin(), head.end(), parts.begin());
    std::copy(tail.rbegin(), tail.rend(), parts.rbegin());
    return parts;
  };

  DecompositionTable t;
  t.family = Family::U;
  t.n = n;
  t.case_kind = CaseKind::Complex;
  t.tau = with_sig(group_component("", 1.0, id, [](const PowerSums& ps) { return ps.p1; },
                                   [](double u) { return 2.0 * u; }),
                   sig({1}, {}));
  IrrepComponent triv = trivial_component(2.0);
  triv.signature = Signature(std::vector<int>(n, 0));
  t.components.push_back(triv);
  t.components.push_back(with_sig(group_component("", 1.0, id, h2, h2_num), sig({2}, {})));
  t.components.push_back(with_sig(group_component("", 1.0, id, e2, e2_num), sig({1, 1}, {})));
  t.components.push_back(with_sig(
      group_component("", 1.0, id, [h2](const PowerSums& ps) { return std::conj(h2(ps)); }, h2_num),
      sig({}, {-2})));
  t.components.push_back(with_sig(
      group_component("", 1.0, id, [e2](const PowerSums& ps) { return std::conj(e2(ps)); }, e2_num),
      sig({}, {-1, -1})));
  t.components.push_back(with_sig(
      group_component(
          "", 2.0, id, [](const PowerSums& ps) { return cplx(std::norm(ps.p1) - 1.0, 0.0); },
          [nn](double u) { return 4.0 * u * (nn - u); }),
      sig({1}, {-1})));
  return t;
}

cplx schur_evaluate(const Signature& lambda, std::span<const cplx> x) {
  const ShiftedPartition shifted = shift_to_partition(lambda, x.size());
  const auto& parts = shifted.partition.parts();
  const int len = static_cast<int>(parts.size());

  cplx prefactor = 1.0;
  if (shifted.power != 0) {
    cplx prod = 1.0;
    for (const cplx& xi : x) prod *= xi;
    prefactor = std::pow(prod, shifted.power);
  }
  if (len == 0) return prefactor;

  // h_k(x_1..x_m) via h_k^{(m)} = h_k^{(m-1)} + x_m h_{k-1}^{(m)}.
  const int max_k = parts.front() + len;
  std::vector<cplx> h(static_cast<std::size_t>(max_k + 1), 0.0);
  h[0] = 1.0;
  for (const cplx& xi : x) {
    for (int k = 1; k <= max_k; ++k) h[static_cast<std::size_t>(k)] += xi * h[static_cast<std::size_t>(k - 1)];
  }
  Eigen::MatrixXcd jt(len, len);
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      const int k = parts[static_cast<std::size_t>(i)] - i + j;
      jt(i, j) = k < 0 ? cplx(0.0) : h[static_cast<std::size_t>(k)];
    }
  }
  return prefactor * jt.determinant();
}

std::vector<cplx> torus_eigenvalues(Family f, std::span<const double> angles) {
  std::vector<cplx> out;
  for (double phi : angles) {
    const cplx z = std::polar(1.0, phi);
    out.push_back(z);
    if (f != Family::U) out.push_back(std::conj(z));
  }
  if (f == Family::SOOdd) out.emplace_back(1.0, 0.0);
  return out;
}

double tensor_square_character_identity(Family f, std::size_t n,
                                        std::span<const cplx> eigenvalues) {
  const DecompositionTable table = builtin_table(f, n);
  if (!table.is_group) throw std::invalid_argument("identity check applies to group families");
  const PowerSums ps = power_sums(eigenvalues);
  if (f == Family::U) {
    if (eigenvalues.size() != n) throw std::invalid_argument("U(n) needs n eigenvalues");
    cplx conj_p1 = 0.0;
    for (const cplx& x : eigenvalues) conj_p1 += 1.0 / x;
    const cplx lhs = (ps.p1 + conj_p1) * (ps.p1 + conj_p1);
    cplx rhs = 0.0;
    for (const auto& c : table.components) rhs += c.multiplicity * schur_evaluate(*c.signature, eigenvalues);
    return std::abs(lhs - rhs);
  }
  const cplx lhs = ps.p1 * ps.p1;
  cplx rhs = 0.0;
  for (const auto& c : table.components) rhs += c.multiplicity * c.dim * c.sample_ratio(ps);
  return std::abs(lhs - rhs);
}

double square_expansion_residual(const DecompositionTable& table, const PowerSums& ps) {
  const cplx w = table.tau.sample_ratio(ps);
  const cplx f = table.case_kind == CaseKind::Complex ? w + std::conj(w) : w;
  const cplx lhs = table.hilbert_dim(table.tau) * f * f;
  cplx rhs = 0.0;
  for (const auto& c : table.components) rhs += c.multiplicity * std::sqrt(table.hilbert_dim(c)) * c.sample_ratio(ps);
  return std::abs(lhs - rhs);
}

}  // namespace steinchar
