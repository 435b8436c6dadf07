#include "steinchar/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace steinchar {

SparsePolynomial SparsePolynomial::monomial_symmetric(const Partition& lambda, std::size_t n_vars) {
  if (lambda.rows() > n_vars) throw std::invalid_argument("partition has more rows than variables");
  Exponent e(n_vars, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  SparsePolynomial p(n_vars);
  do {
    p.add(e, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

Rational SparsePolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add(const Exponent& e, const Rational& c) {
  if (e.size() != n_vars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& c) const {
  SparsePolynomial p(n_vars_);
  for (const auto& [e, v] : terms_) p.add(e, v * c);
  return p;
}

std::complex<double> SparsePolynomial::evaluate(std::span<const std::complex<double>> x) const {
  if (x.size() != n_vars_) throw std::invalid_argument("point dimension mismatch");
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = to_double(c);
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (e[i] != 0) term *= std::pow(x[i], e[i]);
    }
    total += term;
  }
  return total;
}

SparsePolynomial laplace_beltrami(const SparsePolynomial& f, const Rational& alpha) {
  const std::size_t n = f.n_vars();
  SparsePolynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] >= 2) out.add(e, c * alpha / 2 * e[i] * (e[i] - 1));
    }
  }
  // Pair i < j: (x_i^2 d_i f - x_j^2 d_j f) / (x_i - x_j). For symmetric f the
  // numerator is antisymmetric in (i, j), so each monomial x_i^p x_j^q R with
  // p > q pairs with -x_i^q x_j^p R and the quotient is
  // R x_i^q x_j^q (x_i^{p-q-1} + x_i^{p-q-2} x_j + ... + x_j^{p-q-1}).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SparsePolynomial num(n);
      for (const auto& [e, c] : f.terms()) {
        if (e[i] > 0) {
          auto g = e;
          g[i] += 1;
          num.add(g, c * e[i]);
        }
        if (e[j] > 0) {
          auto g = e;
          g[j] += 1;
          num.add(g, -c * e[j]);
        }
      }
      for (const auto& [e, c] : num.terms()) {
        if (e[i] == e[j]) throw std::logic_error("laplace_beltrami needs a symmetric polynomial");
        if (e[i] < e[j]) continue;
        const int p = e[i], q = e[j];
        for (int k = 0; k < p - q; ++k) {
          auto g = e;
          g[i] = q + k;
          g[j] = q + (p - q - 1 - k);
          out.add(g, c);
        }
      }
    }
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t max_rows, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (current.size() == max_rows) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, max_rows, current, out);
    current.pop_back();
  }
}

SparsePolynomial::Exponent leading_exponent(const Partition& lambda, std::size_t n_vars) {
  SparsePolynomial::Exponent e(n_vars, 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  return e;
}

}  // namespace

std::vector<Partition> partitions_of(int size, std::size_t max_rows) {
  if (size < 0) throw std::invalid_argument("size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(size, size, max_rows, current, out);
  return out;
}

SparsePolynomial jack_by_eigenfunction(const Partition& lambda, std::size_t n_vars, const Rational& alpha) {
  if (lambda.rows() > n_vars) throw std::invalid_argument("partition has more rows than variables");
  const auto all = partitions_of(lambda.size(), n_vars);
  const auto top = std::find(all.begin(), all.end(), lambda);
  // Images of each monomial function, indexed like `all`.
  std::vector<SparsePolynomial> images;
  for (const auto& mu : all) images.push_back(laplace_beltrami(SparsePolynomial::monomial_symmetric(mu, n_vars), alpha));
  auto diag = [&](std::size_t k) { return images[k].coefficient(leading_exponent(all[k], n_vars)); };

  const std::size_t start = static_cast<std::size_t>(top - all.begin());
  const Rational eigenvalue = diag(start);
  std::vector<Rational> coeff(all.size(), Rational(0));
  coeff[start] = 1;
  for (std::size_t k = start + 1; k < all.size(); ++k) {
    Rational rhs(0);
    const auto e = leading_exponent(all[k], n_vars);
    for (std::size_t v = start; v < k; ++v) {
      if (coeff[v] != 0) rhs += coeff[v] * images[v].coefficient(e);
    }
    const Rational gap = eigenvalue - diag(k);
    if (gap == 0) {
      if (rhs != 0) throw std::logic_error("degenerate eigenvalue in Jack construction");
      continue;
    }
    coeff[k] = rhs / gap;
  }
  SparsePolynomial p(n_vars);
  for (std::size_t k = start; k < all.size(); ++k) {
    if (coeff[k] != 0) p += SparsePolynomial::monomial_symmetric(all[k], n_vars).scaled(coeff[k]);
  }
  return p;
}

}  // namespace steinchar
