#include "steinchar/stein.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steinchar {

namespace {

double check_deficit(const DecompositionTable& table, const ClassParameter& p, double upper, bool inclusive) {
  const double a = table.a(p);
  const bool above = inclusive ? a > upper : a >= upper;
  if (!(a >= kMinDeficit) || above || !std::isfinite(a)) {
    throw std::invalid_argument("class gives a = " + std::to_string(a) + ", outside the admissible range");
  }
  return a;
}

struct Sums {
  double bracket_sq = 0.0;  // sum over nontrivial of m^2 (2 - d/a)^2
  double e4 = 0.0;          // real-case shape; the complex case is a quarter
  double condvar = 0.0;
  double total_m2 = 0.0;
};

Sums accumulate(const DecompositionTable& table, const ClassParameter& p, double a) {
  Sums s;
  const double u = p.deficit();
  for (const auto& c : table.components) {
    const double m2 = c.multiplicity * c.multiplicity;
    const double d = c.deficit(u);
    s.total_m2 += m2;
    s.e4 += m2 * (8.0 * a - 6.0 * d);
    if (c.is_trivial) continue;
    const double b = 2.0 - d / a;
    s.bracket_sq += m2 * b * b;
    // 1 + r_phi - 2 r_tau = 2a - d
    const double cv = 2.0 * a - d;
    s.condvar += m2 * cv * cv;
  }
  return s;
}

BoundReport assemble(const DecompositionTable& table, const ClassParameter& p, bool complex_case) {
  validate_table(table, p);
  const double a = check_deficit(table, p, 1.0, false);
  const Sums s = accumulate(table, p, a);
  const double scale = complex_case ? 0.25 : 1.0;
  const double radicand = scale * s.e4 / (std::numbers::pi * a);
  if (radicand < -1e-12 * scale * s.total_m2) {
    throw std::invalid_argument("negative fourth-moment radicand: inconsistent table");
  }
  BoundReport r;
  r.theta = p.value();
  r.a = a;
  r.term1 = (complex_case ? 0.5 : 1.0) * std::sqrt(s.bracket_sq);
  r.term2 = std::pow(std::max(radicand, 0.0), 0.25);
  r.total = r.term1 + r.term2;
  if (table.family) {
    const LimitReport lim = limit_report(table);
    r.limit_term1 = lim.exact_limit;
    r.limit_coeff_term2 = lim.term2_coefficient;
  }
  return r;
}

/// Polynomial extrapolation to h = 0 through the points (h_i, f_i).
double extrapolate_to_zero(std::vector<double> h, std::vector<double> f) {
  const std::size_t m = h.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      const double hi = h[i], hj = h[i + level];
      f[i] = (hj * f[i] - hi * f[i + 1]) / (hj - hi);
    }
  }
  return f[0];
}

double sq(double x) { return x * x; }

}  // namespace

BoundReport real_bound(const DecompositionTable& table, const ClassParameter& p) {
  if (table.case_kind != CaseKind::Real) throw std::invalid_argument("real_bound needs a real-case table");
  return assemble(table, p, false);
}

BoundReport complex_bound(const DecompositionTable& table, const ClassParameter& p) {
  if (table.case_kind != CaseKind::Complex) throw std::invalid_argument("complex_bound needs a complex-case table");
  return assemble(table, p, true);
}

BoundReport stein_bound(const DecompositionTable& table, const ClassParameter& p) {
  return table.case_kind == CaseKind::Real ? real_bound(table, p) : complex_bound(table, p);
}

MomentReport moments(const DecompositionTable& table, const ClassParameter& p) {
  validate_table(table, p);
  const double a = check_deficit(table, p, 2.0, true);
  const Sums s = accumulate(table, p, a);
  const double scale = table.case_kind == CaseKind::Complex ? 0.25 : 1.0;
  return {2.0 * a, scale * s.e4, scale * s.condvar};
}

double kth_moment(const std::vector<MultiplicityMap>& mult_tables,
                  const std::map<std::string, double>& ratios, int k, CaseKind kind) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (mult_tables.size() < static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("missing multiplicity table for some r <= k");
  }
  double total = 0.0;
  double binom = 1.0;
  for (int r = 0; r <= k; ++r) {
    if (r > 0) binom = binom * (k - r + 1) / r;
    double inner = 0.0;
    for (const auto& [label, m] : mult_tables[r]) {
      const auto other = mult_tables[k - r].find(label);
      if (other == mult_tables[k - r].end()) continue;
      const auto ratio = ratios.find(label);
      if (ratio == ratios.end()) throw std::invalid_argument("no ratio for component " + label);
      inner += m * other->second * ratio->second;
    }
    total += ((k - r) % 2 == 0 ? 1.0 : -1.0) * binom * inner;
  }
  if (kind == CaseKind::Complex) total /= std::pow(2.0, 0.5 * k);
  return total;
}

std::vector<MultiplicityMap> power_multiplicities(const DecompositionTable& table, int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("power_multiplicities supports k <= 4");
  const bool cx = table.case_kind == CaseKind::Complex;
  const std::string& triv = table.trivial().label;
  double m4 = 0.0;
  MultiplicityMap square;
  for (const auto& c : table.components) {
    m4 += c.multiplicity * c.multiplicity;
    square[c.label] += c.multiplicity;
  }
  std::vector<MultiplicityMap> out;
  out.push_back({{triv, 1.0}});
  if (cx) {
    out.push_back({{kTauKey, 1.0}, {kTauConjKey, 1.0}});
  } else {
    out.push_back({{kTauKey, 1.0}});
  }
  out.push_back(square);
  if (cx) {
    out.push_back({{kTauKey, 0.5 * m4}, {kTauConjKey, 0.5 * m4}});
  } else {
    out.push_back({{kTauKey, m4}});
  }
  out.push_back({{triv, m4}});
  out.resize(static_cast<std::size_t>(k) + 1);
  return out;
}

std::map<std::string, double> class_ratios(const DecompositionTable& table, const ClassParameter& p) {
  std::map<std::string, double> r;
  for (const auto& c : table.components) r[c.label] = c.ratio(p);
  r[kTauKey] = table.tau.ratio(p);
  if (table.case_kind == CaseKind::Complex) r[kTauConjKey] = table.tau.ratio(p);
  return r;
}

double stated_bound(Family f, std::size_t n) {
  const double x = static_cast<double>(n);
  switch (f) {
    case Family::USp:
    case Family::SOOdd: return std::sqrt(2.0) / x;
    case Family::OEven: return std::sqrt(2.0) / (x - 1.0);
    case Family::U: return 2.0 / (x - 1.0);
    case Family::Sphere: return 2.0 * std::sqrt(2.0) / (x - 1.0);
    case Family::COE:
    case Family::CSE: return 4.0 / x;
  }
  throw std::invalid_argument("unknown family");
}

double exact_limit_closed_form(Family f, std::size_t n) {
  const double x = static_cast<double>(n);
  switch (f) {
    case Family::USp: return 2.0 * std::sqrt(2.0) / (2.0 * x + 1.0);
    case Family::SOOdd: return std::sqrt(2.0) / x;
    case Family::OEven: return std::sqrt(8.0) / (2.0 * x - 1.0);
    case Family::U: return 2.0 * std::sqrt(x * x + 2.0) / (x * x - 1.0);
    case Family::Sphere: return 2.0 * std::sqrt(2.0) / std::sqrt((x - 1.0) * (x + 2.0));
    case Family::COE:
      return std::sqrt(8.0 * (x * x * x + 2.0 * x * x + 5.0 * x + 6.0) / (x * x * x + 4.0 * x * x + x - 6.0)) / x;
    case Family::CSE:
      return std::sqrt(8.0 * (4.0 * x * x * x - 4.0 * x * x + 5.0 * x - 3.0) /
                       (4.0 * x * x * x - 8.0 * x * x + x + 3.0)) /
             (2.0 * x);
  }
  throw std::invalid_argument("unknown family");
}

double term2_coefficient_closed_form(Family f, std::size_t n) {
  const double x = static_cast<double>(n);
  const double pi = std::numbers::pi;
  switch (f) {
    case Family::USp: return 24.0 / (pi * (2.0 * x + 1.0));
    case Family::SOOdd: return 12.0 * (2.0 * x + 1.0) / (pi * x * (2.0 * x + 3.0));
    case Family::OEven: return 24.0 * x / (pi * (x + 1.0) * (2.0 * x - 1.0));
    case Family::U: return 12.0 * (2.0 * x - 1.0) / (pi * (x * x - 1.0));
    case Family::Sphere: return 12.0 * x / (pi * (x + 2.0));
    case Family::COE: return 24.0 * sq(x + 1.0) / (pi * x * x * (x + 3.0));
    case Family::CSE: return 6.0 * (2.0 * x - 1.0) * (4.0 * x - 5.0) / (pi * x * x * (2.0 * x - 3.0));
  }
  throw std::invalid_argument("unknown family");
}

LimitReport limit_report(const DecompositionTable& table) {
  if (!table.family) throw std::invalid_argument("limit_report needs a built-in family table");
  const Family f = *table.family;
  const std::size_t n = table.n;

  // Evaluate the sums directly: the report must not recurse into itself.
  auto term1_at = [&](double theta) {
    const ClassParameter p = ClassParameter::for_family(f, theta);
    const double a = table.a(p);
    const Sums s = accumulate(table, p, a);
    return (table.case_kind == CaseKind::Complex ? 0.5 : 1.0) * std::sqrt(s.bracket_sq);
  };
  auto coeff_at = [&](double theta) {
    const ClassParameter p = ClassParameter::for_family(f, theta);
    const double a = table.a(p);
    const Sums s = accumulate(table, p, a);
    const double scale = table.case_kind == CaseKind::Complex ? 0.25 : 1.0;
    return scale * s.e4 / (std::numbers::pi * a * p.deficit());
  };
  auto ladder = [](const std::array<double, 3>& thetas, auto&& fn) {
    std::vector<double> h, v;
    for (double t : thetas) {
      h.push_back(ClassParameter::angle(t).deficit());
      v.push_back(fn(t));
    }
    return extrapolate_to_zero(h, v);
  };

  LimitReport r{f, n};
  r.stated_bound = stated_bound(f, n);
  r.exact_limit = exact_limit_closed_form(f, n);
  r.term2_coefficient = term2_coefficient_closed_form(f, n);
  r.extrapolated_limit = ladder({1e-2, 1e-3, 1e-4}, term1_at);
  // The fourth moment cancels to leading order, so the ladder for its
  // coefficient starts further from the identity.
  r.extrapolated_term2_coefficient = ladder({1e-1, 1e-2, 1e-3}, coeff_at);

  auto agree = [](double x, double y) { return std::abs(x - y) <= 1e-6 * std::max(std::abs(x), std::abs(y)); };
  if (!agree(r.exact_limit, r.extrapolated_limit) || !agree(r.term2_coefficient, r.extrapolated_term2_coefficient)) {
    throw std::logic_error("closed-form limit disagrees with extrapolation for " + family_name(f));
  }
  return r;
}

}  // namespace steinchar
