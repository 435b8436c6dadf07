#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "steinchar/sampling.hpp"

namespace steinchar {

namespace {

double log_abs(double x) { return x == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(std::abs(x)); }

/// Terms of the log density that involve angle i.
double local_log_density(WeylDensity density, double beta, const std::vector<double>& phi, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (j == i) continue;
    if (density == WeylDensity::Circular) {
      if (beta != 0.0) s += beta * log_abs(2.0 * std::sin(0.5 * (phi[i] - phi[j])));
    } else {
      s += 2.0 * log_abs(std::cos(phi[i]) - std::cos(phi[j]));
    }
  }
  if (density == WeylDensity::Symplectic) s += 2.0 * log_abs(std::sin(phi[i]));
  if (density == WeylDensity::OddOrthogonal) s += 2.0 * log_abs(std::sin(0.5 * phi[i]));
  return s;
}

double wrap(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  return x < 0.0 ? x + two_pi : x;
}

}  // namespace

double weyl_log_density(WeylDensity density, double beta, const std::vector<double>& angles) {
  double s = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      if (density == WeylDensity::Circular) {
        if (beta != 0.0) s += beta * log_abs(2.0 * std::sin(0.5 * (angles[i] - angles[j])));
      } else {
        s += 2.0 * log_abs(std::cos(angles[i]) - std::cos(angles[j]));
      }
    }
    if (density == WeylDensity::Symplectic) s += 2.0 * log_abs(std::sin(angles[i]));
    if (density == WeylDensity::OddOrthogonal) s += 2.0 * log_abs(std::sin(0.5 * angles[i]));
  }
  return s;
}

std::pair<WeylDensity, double> weyl_density_of(Family f) {
  switch (f) {
    case Family::U: return {WeylDensity::Circular, 2.0};
    case Family::COE: return {WeylDensity::Circular, 1.0};
    case Family::CSE: return {WeylDensity::Circular, 4.0};
    case Family::USp: return {WeylDensity::Symplectic, 0.0};
    case Family::SOOdd: return {WeylDensity::OddOrthogonal, 0.0};
    case Family::OEven:
    case Family::Sphere: break;
  }
  throw std::invalid_argument("no eigenvalue-angle sampler for " + family_name(f));
}

ChainReport weyl_mcmc(WeylDensity density, std::size_t n, const ChainParams& params, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n ≥ 1 required");
  if (params.thin < 1) throw std::invalid_argument("thin must be at least 1");
  if (!(params.step > 0.0)) throw std::invalid_argument("step must be positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  std::vector<double> phi(n);
  for (auto& x : phi) x = 2.0 * std::numbers::pi * unit(rng);
  // Start away from zeros of the density.
  while (!std::isfinite(weyl_log_density(density, params.beta, phi))) {
    for (auto& x : phi) x = 2.0 * std::numbers::pi * unit(rng);
  }

  std::size_t proposed = 0, accepted = 0;
  auto sweep = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      const double old_angle = phi[i];
      const double before = local_log_density(density, params.beta, phi, i);
      phi[i] = wrap(old_angle + params.step * normal(rng));
      const double after = local_log_density(density, params.beta, phi, i);
      ++proposed;
      if (std::log(unit(rng)) < after - before) {
        ++accepted;
      } else {
        phi[i] = old_angle;
      }
    }
  };

  for (std::size_t s = 0; s < params.burn_in; ++s) sweep();
  ChainReport report;
  report.angles.reserve(params.count);
  std::vector<double> stat;
  stat.reserve(params.count);
  for (std::size_t c = 0; c < params.count; ++c) {
    for (std::size_t t = 0; t < params.thin; ++t) sweep();
    report.angles.push_back(phi);
    double s = 0.0;
    for (double x : phi) s += std::cos(x);
    stat.push_back(s);
  }
  report.acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;

  if (stat.size() > 2) {
    double mean = 0.0;
    for (double x : stat) mean += x;
    mean /= static_cast<double>(stat.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < stat.size(); ++i) {
      den += (stat[i] - mean) * (stat[i] - mean);
      if (i + 1 < stat.size()) num += (stat[i] - mean) * (stat[i + 1] - mean);
    }
    report.lag1_autocorrelation = den > 0.0 ? num / den : 0.0;
  }
  if (report.acceptance_rate < 0.1 || report.acceptance_rate > 0.9) {
    report.warnings.push_back("acceptance rate " + std::to_string(report.acceptance_rate) +
                              " outside [0.1, 0.9]; adjust the step size");
  }
  return report;
}

}  // namespace steinchar
