#include "steinchar/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steinchar/polynomial.hpp"
#include "steinchar/sampling.hpp"

namespace steinchar {

namespace {

struct InnerProducts {
  double cross = 0.0;  // <m_(2), m_(1,1)>
  double norm = 0.0;   // <m_(1,1), m_(1,1)>
};

/// Trapezoidal torus averages with the first angle fixed at 0 (the
/// integrands are invariant under a common rotation).
InnerProducts torus_inner_products(std::size_t n_vars, int beta, int grid) {
  const double h = 2.0 * std::numbers::pi / grid;
  auto weight = [beta](const std::vector<cplx>& x) {
    double w = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) w *= std::pow(std::abs(x[i] - x[j]), beta);
    return w;
  };
  auto accumulate = [&](const std::vector<cplx>& x, InnerProducts& acc) {
    cplx m2 = 0.0, m11 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      m2 += x[i] * x[i];
      for (std::size_t j = i + 1; j < x.size(); ++j) m11 += x[i] * x[j];
    }
    const double w = weight(x);
    acc.cross += w * (m2 * std::conj(m11)).real();
    acc.norm += w * std::norm(m11);
  };
  InnerProducts acc;
  std::vector<cplx> x(n_vars, 1.0);
  if (n_vars == 2) {
    for (int k = 0; k < grid; ++k) {
      x[1] = std::polar(1.0, k * h);
      accumulate(x, acc);
    }
    acc.cross /= grid;
    acc.norm /= grid;
  } else {
    for (int k = 0; k < grid; ++k) {
      x[1] = std::polar(1.0, k * h);
      for (int l = 0; l < grid; ++l) {
        x[2] = std::polar(1.0, l * h);
        accumulate(x, acc);
      }
    }
    const double cells = static_cast<double>(grid) * grid;
    acc.cross /= cells;
    acc.norm /= cells;
  }
  return acc;
}

/// Romberg extrapolation of trapezoidal values on grids N, 2N, 4N (error
/// expansion in even powers of the spacing).
double romberg(double coarse, double mid, double fine) {
  const double r1 = (4.0 * mid - coarse) / 3.0;
  const double r2 = (4.0 * fine - mid) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double gram_schmidt_coefficient(std::size_t n_vars, int beta, int grid) {
  const auto a = torus_inner_products(n_vars, beta, grid);
  const auto b = torus_inner_products(n_vars, beta, 2 * grid);
  const auto c = torus_inner_products(n_vars, beta, 4 * grid);
  return -romberg(a.cross, b.cross, c.cross) / romberg(a.norm, b.norm, c.norm);
}

double extrapolate(const std::vector<double>& h, std::vector<double> f, std::size_t upto) {
  for (std::size_t level = 1; level <= upto; ++level) {
    for (std::size_t i = 0; i + level <= upto; ++i) {
      f[i] = (h[i + level] * f[i] - h[i] * f[i + 1]) / (h[i + level] - h[i]);
    }
  }
  return f[0];
}

}  // namespace

GramSchmidtResult jack_gram_schmidt(std::size_t n_vars, int beta, int grid_points) {
  if (n_vars != 2 && n_vars != 3) throw std::invalid_argument("jack_gram_schmidt supports 2 or 3 variables");
  if (beta != 1 && beta != 2 && beta != 4) throw std::invalid_argument("beta must be 1, 2 or 4");
  if (grid_points < 8) throw std::invalid_argument("grid too coarse");
  GramSchmidtResult r;
  r.grid_points = grid_points;
  r.coefficient = gram_schmidt_coefficient(n_vars, beta, grid_points);
  const double refined = gram_schmidt_coefficient(n_vars, beta, 2 * grid_points);
  r.grid_change = std::abs(refined - r.coefficient);
  if (r.grid_change > 1e-6) {
    throw std::runtime_error("torus quadrature not converged: grid doubling moved c by " +
                             std::to_string(r.grid_change));
  }
  r.coefficient = refined;
  return r;
}

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::Unitary: return "u";
    case Ensemble::COE: return "coe";
    case Ensemble::CSE: return "cse";
  }
  return "?";
}

PieriFit pieri_least_squares(std::size_t n_vars, Ensemble ensemble, std::size_t points, std::uint64_t seed) {
  constexpr std::size_t kBasis = 6;
  if (n_vars < 2) throw std::invalid_argument("n ≥ 2 required");
  if (points < 3 * kBasis) throw std::invalid_argument("need at least three points per coefficient");
  const Rational alpha = ensemble == Ensemble::COE ? Rational(2) : ensemble == Ensemble::CSE ? Rational(1, 2) : Rational(1);

  const auto p2 = jack_by_eigenfunction(Partition({2}), n_vars, alpha);
  const auto p11 = jack_by_eigenfunction(Partition({1, 1}), n_vars, alpha);
  std::vector<int> hook(n_vars - 1, 1);
  hook.front() = 2;
  const auto p_hook = jack_by_eigenfunction(Partition(hook), n_vars, alpha);

  Rng rng = batch_rng(seed, 0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const auto rows = static_cast<Eigen::Index>(points);
  Eigen::MatrixXcd a(rows, static_cast<Eigen::Index>(kBasis));
  Eigen::VectorXcd b(rows);
  std::vector<cplx> x(n_vars);
  for (Eigen::Index k = 0; k < rows; ++k) {
    cplx p1 = 0.0, prod = 1.0;
    for (auto& xi : x) {
      xi = std::polar(1.0, angle(rng));
      p1 += xi;
      prod *= xi;
    }
    const cplx v2 = p2.evaluate(x), v11 = p11.evaluate(x);
    a(k, 0) = 1.0;
    a(k, 1) = v2;
    a(k, 2) = v11;
    a(k, 3) = p_hook.evaluate(x) / prod;
    a(k, 4) = std::conj(v2);
    a(k, 5) = std::conj(v11);
    const cplx s = p1 + std::conj(p1);
    b(k) = s * s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  PieriFit fit;
  fit.condition_number = sv(0) / sv(sv.size() - 1);
  if (!(fit.condition_number <= 1e8)) {
    throw std::runtime_error("ill-conditioned Pieri system, condition number " + std::to_string(fit.condition_number));
  }
  const Eigen::VectorXcd coeff = svd.solve(b);
  fit.residual = (a * coeff - b).norm() / std::sqrt(static_cast<double>(points));
  const char* labels[kBasis] = {"trivial", "(2)", "(1,1)", "(1,0,...,0,-1)", "conj (2)", "conj (1,1)"};
  for (std::size_t i = 0; i < kBasis; ++i) {
    const cplx c = coeff(static_cast<Eigen::Index>(i));
    fit.terms.push_back({labels[i], c.real()});
    fit.max_imaginary = std::max(fit.max_imaginary, std::abs(c.imag()));
  }
  return fit;
}

MultiplicityEstimate monte_carlo_multiplicity(Family f, std::size_t n, const std::string& phi_label, int r,
                                              std::size_t count, std::uint64_t seed) {
  if (r < 0 || r > 4) throw std::invalid_argument("r must lie in 0..4");
  if (count < 2) throw std::invalid_argument("count must be at least 2");
  const DecompositionTable table = builtin_table(f, n);
  const IrrepComponent* phi = nullptr;
  if (phi_label == "tau") {
    phi = &table.tau;
  } else {
    for (const auto& c : table.components)
      if (c.label == phi_label) phi = &c;
  }
  if (!phi) throw std::invalid_argument("no component labelled " + phi_label);
  const bool cx = table.case_kind == CaseKind::Complex;
  const double scale = std::sqrt(table.hilbert_dim(*phi) * std::pow(table.hilbert_dim(table.tau), r));

  std::vector<cplx> values;
  values.reserve(count);
  for (std::size_t b = 0; values.size() < count; ++b) {
    Rng rng = batch_rng(seed, b);
    for (std::size_t k = 0; k < kBatchSize && values.size() < count; ++k) {
      const PowerSums ps = sample_power_sums(f, n, rng);
      const cplx w = table.tau.sample_ratio(ps);
      const cplx base = cx ? w + std::conj(w) : w;
      values.push_back(scale * std::pow(base, r) * std::conj(phi->sample_ratio(ps)));
    }
  }
  // Delete-one jackknife of the mean.
  const double m = static_cast<double>(count);
  cplx total = 0.0;
  for (const auto& v : values) total += v;
  const cplx mean = total / m;
  double ss = 0.0;
  for (const auto& v : values) {
    const double loo = ((total - v) / (m - 1.0)).real();
    ss += (loo - mean.real()) * (loo - mean.real());
  }
  MultiplicityEstimate est;
  est.label = phi_label;
  est.estimate = mean.real();
  est.imaginary = mean.imag();
  est.standard_error = std::sqrt((m - 1.0) / m * ss);
  est.count = count;
  return est;
}

LimitEstimate numeric_limit(const std::function<double(double)>& f, const std::vector<double>& thetas) {
  if (thetas.size() < 3) throw std::invalid_argument("need at least three ladder points");
  std::vector<double> h, v;
  for (double t : thetas) {
    h.push_back(ClassParameter::angle(t).deficit());
    v.push_back(f(t));
  }
  std::vector<double> estimates;
  for (std::size_t k = 0; k < h.size(); ++k) estimates.push_back(extrapolate(h, v, k));
  const double last = estimates.back();
  const double step = std::abs(last - estimates[estimates.size() - 2]);
  if (!std::isfinite(last) || step > 1e-6 * std::max(1.0, std::abs(last))) {
    throw std::runtime_error("extrapolation ladder does not converge");
  }
  return {last, step};
}

}  // namespace steinchar
