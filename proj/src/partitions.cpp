#include "steinchar/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace steinchar {

Signature::Signature(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("signature parts must be weakly decreasing");
    }
  }
}

bool Signature::is_partition() const {
  return parts_.empty() || parts_.back() >= 0;
}

std::string Signature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

int Partition::size() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Partition::column_height(int col) const {
  int h = 0;
  for (int p : parts_) {
    if (p > col) ++h;
    else break;
  }
  return h;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(parts_.front()));
  for (int c = 0; c < parts_.front(); ++c) cols[static_cast<std::size_t>(c)] = column_height(c);
  return Partition(std::move(cols));
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  const auto& rows = lambda.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int row = static_cast<int>(i);
    for (int j = 0; j < rows[i]; ++j) {
      const int height = lambda.column_height(j);
      out.push_back(Box{row, j,
                        BoxStats{rows[i] - j - 1, height - row - 1, j, row}});
    }
  }
  return out;
}

ShiftedPartition shift_to_partition(const Signature& lambda, std::size_t n_vars) {
  if (lambda.length() != n_vars) {
    throw std::invalid_argument("signature length " + std::to_string(lambda.length()) +
                                " does not match number of variables " +
                                std::to_string(n_vars));
  }
  if (n_vars == 0) return {};
  const int k = std::max(0, -lambda.parts().back());
  std::vector<int> shifted = lambda.parts();
  for (int& p : shifted) p += k;
  return {Partition(std::move(shifted)), -k};
}

Signature adjoint_signature(std::size_t n_vars) {
  if (n_vars < 2) throw std::invalid_argument("adjoint signature needs n >= 2");
  std::vector<int> parts(n_vars, 0);
  parts.front() = 1;
  parts.back() = -1;
  return Signature(std::move(parts));
}

Signature pad(const Partition& lambda, std::size_t n_vars) {
  if (lambda.rows() > n_vars) throw std::invalid_argument("partition has more rows than variables");
  std::vector<int> parts = lambda.parts();
  parts.resize(n_vars, 0);
  return Signature(std::move(parts));
}

Signature dual(const Signature& lambda) {
  std::vector<int> parts(lambda.parts().rbegin(), lambda.parts().rend());
  for (int& p : parts) p = -p;
  return Signature(std::move(parts));
}

}  // namespace steinchar
