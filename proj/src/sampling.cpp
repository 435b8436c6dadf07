#include "steinchar/sampling.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace steinchar {

Rng batch_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Eigen::MatrixXcd haar_unitary(std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n ≥ 1 required");
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd z(n, n);
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const cplx d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Eigen::MatrixXd haar_orthogonal(std::size_t n, Rng& rng, OrthogonalComponent component) {
  if (n < 1) throw std::invalid_argument("n ≥ 1 required");
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(n, n);
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  // Right multiplication by a fixed reflection maps Haar measure on the
  // other component to Haar measure on SO(n).
  if (component == OrthogonalComponent::Special && q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

Eigen::MatrixXcd symplectic_form(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * k, 2 * k);
  j.topRightCorner(k, k).setIdentity();
  j.bottomLeftCorner(k, k) = -Eigen::MatrixXcd::Identity(k, k);
  return j;
}

namespace {

/// The column forced next to v in a unitary symplectic matrix: for
/// v = [x; y] it is [-conj(y); conj(x)].
Eigen::VectorXcd partner(const Eigen::VectorXcd& v) {
  const Eigen::Index k = v.size() / 2;
  Eigen::VectorXcd w(v.size());
  w.head(k) = -v.tail(k).conjugate();
  w.tail(k) = v.head(k).conjugate();
  return w;
}

}  // namespace

Eigen::MatrixXcd haar_symplectic(std::size_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n ≥ 1 required");
  const auto k = static_cast<Eigen::Index>(n);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd g(2 * k, 2 * k);
  for (Eigen::Index col = 0; col < k; ++col) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 16) throw std::runtime_error("symplectic Gram-Schmidt broke down");
      Eigen::VectorXcd v(2 * k);
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(normal(rng), normal(rng));
      const double start = v.norm();
      // Twice, for numerical orthogonality.
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index j = 0; j < col; ++j) {
          v -= g.col(j) * g.col(j).dot(v);
          v -= g.col(k + j) * g.col(k + j).dot(v);
        }
      }
      const double norm = v.norm();
      if (norm < 1e-8 * start) continue;
      v /= norm;
      g.col(col) = v;
      g.col(k + col) = partner(v);
      break;
    }
  }
  return g;
}

Eigen::MatrixXcd coe_matrix(std::size_t n, Rng& rng) {
  const Eigen::MatrixXcd g = haar_unitary(n, rng);
  return g * g.transpose();
}

namespace {

Eigen::MatrixXcd quaternion_dual(const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& j) {
  return j * g.transpose() * j.transpose();
}

cplx trace_of_square(const Eigen::MatrixXcd& m) { return (m.array() * m.transpose().array()).sum(); }

PowerSums matrix_power_sums(const Eigen::MatrixXcd& m, double scale = 1.0) {
  return {m.trace() * scale, trace_of_square(m) * scale};
}

}  // namespace

Eigen::MatrixXcd cse_matrix(std::size_t n, Rng& rng) {
  const Eigen::MatrixXcd g = haar_unitary(2 * n, rng);
  return g * quaternion_dual(g, symplectic_form(n));
}

double coe_sample(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required");
  const cplx tr = coe_matrix(n, rng).trace();
  return std::sqrt(1.0 + 1.0 / static_cast<double>(n)) * tr.real();
}

double cse_sample(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required");
  const cplx tr = cse_matrix(n, rng).trace();
  return std::sqrt(1.0 - 0.5 / static_cast<double>(n)) * tr.real();
}

namespace {

Eigen::VectorXd sphere_point(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (;;) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

}  // namespace

double sphere_sample(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("n ≥ 2 required");
  return sphere_point(n, rng)(static_cast<Eigen::Index>(n) - 1);
}

PowerSums sample_power_sums(Family f, std::size_t n, Rng& rng) {
  switch (f) {
    case Family::USp: return matrix_power_sums(haar_symplectic(n, rng));
    case Family::SOOdd:
      return matrix_power_sums(haar_orthogonal(2 * n + 1, rng, OrthogonalComponent::Special).cast<cplx>());
    case Family::OEven: return matrix_power_sums(haar_orthogonal(2 * n, rng, OrthogonalComponent::Full).cast<cplx>());
    case Family::U: return matrix_power_sums(haar_unitary(n, rng));
    case Family::Sphere: return {sphere_sample(n, rng), 0.0};
    case Family::COE: return matrix_power_sums(coe_matrix(n, rng));
    case Family::CSE: return matrix_power_sums(cse_matrix(n, rng), 0.5);
  }
  throw std::invalid_argument("unknown family");
}

namespace {

void check_size(Family f, std::size_t n) {
  if (n < min_size(f)) throw std::invalid_argument("n ≥ " + std::to_string(min_size(f)) + " required");
}

std::size_t batch_count(std::size_t count) { return (count + kBatchSize - 1) / kBatchSize; }

template <typename T, typename Fn>
std::vector<T> run_batches(std::size_t count, std::uint64_t seed, Fn&& draw_batch) {
  const std::size_t batches = batch_count(count);
  std::vector<std::future<std::vector<T>>> futures;
  futures.reserve(batches);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t size = std::min(kBatchSize, count - b * kBatchSize);
    futures.push_back(std::async(std::launch::async, [&draw_batch, seed, b, size] {
      Rng rng = batch_rng(seed, b);
      return draw_batch(size, rng);
    }));
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& fut : futures) {
    auto part = fut.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Diagonal class representative: 1 everywhere except e^{+-i theta} at the
/// two given positions.
Eigen::MatrixXcd diagonal_rotation(Eigen::Index size, Eigen::Index plus, Eigen::Index minus, double theta) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Identity(size, size);
  d(plus, plus) = std::polar(1.0, theta);
  d(minus, minus) = std::polar(1.0, -theta);
  return d;
}

Eigen::MatrixXd plane_rotation(Eigen::Index size, double theta) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(size, size);
  r(0, 0) = std::cos(theta);
  r(1, 1) = std::cos(theta);
  r(0, 1) = -std::sin(theta);
  r(1, 0) = std::sin(theta);
  return r;
}

std::pair<double, double> pair_with_table(const DecompositionTable& table, Family f, std::size_t n, double theta,
                                          Rng& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  switch (f) {
    case Family::U: {
      const Eigen::MatrixXcd g = haar_unitary(n, rng);
      const Eigen::MatrixXcd h = haar_unitary(n, rng);
      const Eigen::MatrixXcd alpha = h * diagonal_rotation(k, k - 2, k - 1, theta) * h.adjoint();
      return {table.w_value(matrix_power_sums(g)), table.w_value(matrix_power_sums(alpha * g))};
    }
    case Family::USp: {
      const Eigen::MatrixXcd g = haar_symplectic(n, rng);
      const Eigen::MatrixXcd h = haar_symplectic(n, rng);
      const Eigen::MatrixXcd alpha = h * diagonal_rotation(2 * k, k - 1, 2 * k - 1, theta) * h.adjoint();
      return {table.w_value(matrix_power_sums(g)), table.w_value(matrix_power_sums(alpha * g))};
    }
    case Family::SOOdd:
    case Family::OEven: {
      const bool odd = f == Family::SOOdd;
      const std::size_t dim = odd ? 2 * n + 1 : 2 * n;
      const auto comp = odd ? OrthogonalComponent::Special : OrthogonalComponent::Full;
      const Eigen::MatrixXd g = haar_orthogonal(dim, rng, comp);
      const Eigen::MatrixXd h = haar_orthogonal(dim, rng, comp);
      const Eigen::MatrixXd alpha = h * plane_rotation(static_cast<Eigen::Index>(dim), theta) * h.transpose();
      return {table.w_value(matrix_power_sums(g.cast<cplx>())),
              table.w_value(matrix_power_sums((alpha * g).cast<cplx>()))};
    }
    case Family::COE: {
      // Tr(alpha g (alpha g)^T) = Tr(alpha0^2 k2 S k2^T) for alpha = k1 alpha0 k2.
      const Eigen::MatrixXcd s = coe_matrix(n, rng);
      const Eigen::MatrixXcd k2 = haar_orthogonal(n, rng, OrthogonalComponent::Full).cast<cplx>();
      const Eigen::MatrixXcd moved = diagonal_rotation(k, k - 2, k - 1, theta) * k2 * s * k2.transpose();
      return {table.w_value(matrix_power_sums(s)), table.w_value(matrix_power_sums(moved))};
    }
    case Family::CSE: {
      // alpha0 = diag(d, d) commutes with the dual: alpha0^D alpha0 = diag(d^2, d^2).
      const Eigen::MatrixXcd s = cse_matrix(n, rng);
      const Eigen::MatrixXcd k2 = haar_symplectic(n, rng);
      Eigen::MatrixXcd rot = Eigen::MatrixXcd::Identity(2 * k, 2 * k);
      rot(k - 2, k - 2) = rot(2 * k - 2, 2 * k - 2) = std::polar(1.0, theta);
      rot(k - 1, k - 1) = rot(2 * k - 1, 2 * k - 1) = std::polar(1.0, -theta);
      const Eigen::MatrixXcd moved = rot * k2 * s * k2.adjoint();
      return {table.w_value(matrix_power_sums(s, 0.5)), table.w_value(matrix_power_sums(moved, 0.5))};
    }
    case Family::Sphere: {
      // alpha0 rotates the (e_{n-1}, e_n) plane; k2 fixes e_n.
      const Eigen::VectorXd v = sphere_point(n, rng);
      const Eigen::MatrixXd k2 = haar_orthogonal(n - 1, rng, OrthogonalComponent::Full);
      const double y = k2.row(k - 2).dot(v.head(k - 1));
      const double x = v(k - 1);
      const double moved = std::cos(theta) * x + std::sin(theta) * y;
      return {table.w_value({x, 0.0}), table.w_value({moved, 0.0})};
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

SampleBatch sample_w(Family f, std::size_t n, std::size_t count, std::uint64_t seed) {
  check_size(f, n);
  const DecompositionTable table = builtin_table(f, n);
  SampleBatch batch{f, n, count, seed, {}};
  batch.values = run_batches<double>(count, seed, [&](std::size_t size, Rng& rng) {
    std::vector<double> out(size);
    for (auto& w : out) w = table.w_value(sample_power_sums(f, n, rng));
    return out;
  });
  return batch;
}

std::pair<double, double> exchangeable_pair(Family f, std::size_t n, double theta, Rng& rng) {
  check_size(f, n);
  ClassParameter::angle(theta);
  return pair_with_table(builtin_table(f, n), f, n, theta, rng);
}

PairBatch sample_pairs(Family f, std::size_t n, double theta, std::size_t count, std::uint64_t seed) {
  check_size(f, n);
  ClassParameter::angle(theta);
  const DecompositionTable table = builtin_table(f, n);
  PairBatch batch{f, n, theta, count, seed, {}};
  batch.pairs = run_batches<std::pair<double, double>>(count, seed, [&](std::size_t size, Rng& rng) {
    std::vector<std::pair<double, double>> out(size);
    for (auto& p : out) p = pair_with_table(table, f, n, theta, rng);
    return out;
  });
  return batch;
}

}  // namespace steinchar
