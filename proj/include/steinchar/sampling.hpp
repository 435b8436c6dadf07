#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "steinchar/characters.hpp"

namespace steinchar {

using Rng = std::mt19937_64;

/// Stream for batch `index` of a run with the given seed. Streams of
/// different batches are independent and reproducible.
Rng batch_rng(std::uint64_t seed, std::uint64_t index);

Eigen::MatrixXcd haar_unitary(std::size_t n, Rng& rng);

enum class OrthogonalComponent { Full, Special };
Eigen::MatrixXd haar_orthogonal(std::size_t n, Rng& rng, OrthogonalComponent component);

/// The form [[0, I], [-I, 0]] of size 2n.
Eigen::MatrixXcd symplectic_form(std::size_t n);
/// 2n x 2n unitary g with g J g^T = J.
Eigen::MatrixXcd haar_symplectic(std::size_t n, Rng& rng);

/// g g^T with g Haar on U(n).
Eigen::MatrixXcd coe_matrix(std::size_t n, Rng& rng);
/// g g^D with g Haar on U(2n) and g^D = J g^T J^T the quaternion dual. The
/// eigenvalues are doubly degenerate.
Eigen::MatrixXcd cse_matrix(std::size_t n, Rng& rng);

double coe_sample(std::size_t n, Rng& rng);
double cse_sample(std::size_t n, Rng& rng);
/// Last coordinate of a uniform point on the unit sphere in R^n.
double sphere_sample(std::size_t n, Rng& rng);

/// Power sums of a random element, in the convention of the family's table
/// (CSE: over the n distinct eigenvalues; sphere: p1 = x).
PowerSums sample_power_sums(Family f, std::size_t n, Rng& rng);

struct SampleBatch {
  Family family;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;
};

struct PairBatch {
  Family family;
  std::size_t n = 0;
  double theta = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<double, double>> pairs;
};

/// Draws per batch; fixed so results do not depend on the thread count.
inline constexpr std::size_t kBatchSize = 8192;

/// count draws of W, split into batches generated concurrently.
SampleBatch sample_w(Family f, std::size_t n, std::size_t count, std::uint64_t seed);

/// One exchangeable pair (W, W'): W' = W(alpha g) with alpha uniform on the
/// class (groups) or double coset (symmetric spaces) of the rotation by theta.
std::pair<double, double> exchangeable_pair(Family f, std::size_t n, double theta, Rng& rng);

PairBatch sample_pairs(Family f, std::size_t n, double theta, std::size_t count, std::uint64_t seed);

// Eigenvalue-angle Metropolis sampler.

enum class WeylDensity { Circular, Symplectic, OddOrthogonal };

struct ChainParams {
  std::size_t count = 10000;
  std::size_t burn_in = 2000;
  /// Full sweeps between retained samples.
  std::size_t thin = 5;
  double step = 0.5;
  /// Exponent of prod |e^{i phi_j} - e^{i phi_k}| for the circular density.
  double beta = 2.0;
};

struct ChainReport {
  std::vector<std::vector<double>> angles;
  double acceptance_rate = 0.0;
  /// Lag-1 autocorrelation of sum_k cos(phi_k) across retained samples.
  double lag1_autocorrelation = 0.0;
  std::vector<std::string> warnings;
};

/// Metropolis chain targeting the eigenvalue-angle density of the family:
/// circular beta ensembles (U: beta 2, COE: 1, CSE: 4, beta 0 flat),
/// USp(2n) and SO(2n+1) Weyl densities.
ChainReport weyl_mcmc(WeylDensity density, std::size_t n, const ChainParams& params, Rng& rng);
/// The density and beta that describe the family's eigenvalues.
std::pair<WeylDensity, double> weyl_density_of(Family f);

/// Log of the unnormalized density at the given angles.
double weyl_log_density(WeylDensity density, double beta, const std::vector<double>& angles);

}  // namespace steinchar
