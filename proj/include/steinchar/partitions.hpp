#pragma once

#include <compare>
#include <string>
#include <vector>

namespace steinchar {

/// Weakly decreasing integer sequence labelling an irreducible representation
/// of U(n) or a Jack/Schur polynomial in n variables. Trailing zeros are kept
/// so that length() is the number of variables.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool is_partition() const;
  std::string to_string() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<int> parts_;
};

/// A signature with nonnegative parts. Zero parts are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  int size() const;
  int column_height(int col) const;
  Partition conjugate() const;
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Arm, leg, co-arm and co-leg of a box: the number of cells east, south,
/// west and north of it in the Young diagram.
struct BoxStats {
  int arm = 0;
  int leg = 0;
  int coarm = 0;
  int coleg = 0;

  friend bool operator==(const BoxStats&, const BoxStats&) = default;
};

struct Box {
  int row = 0;  // 0-indexed
  int col = 0;  // 0-indexed
  BoxStats stats;
};

std::vector<Box> boxes(const Partition& lambda);

struct ShiftedPartition {
  Partition partition;
  /// Exponent of (x_1 ... x_n) multiplying the partition's polynomial.
  int power = 0;
};

/// Rewrites a signature with negative parts as (x_1...x_n)^{-k} times the
/// polynomial of lambda + (k^n), with k = max(0, -lambda_n).
ShiftedPartition shift_to_partition(const Signature& lambda, std::size_t n_vars);

/// (1, 0, ..., 0, -1) in n variables.
Signature adjoint_signature(std::size_t n_vars);

/// Pads a partition with zeros to a signature of the given length.
Signature pad(const Partition& lambda, std::size_t n_vars);

/// The signature of the complex-conjugate representation:
/// (-lambda_n, ..., -lambda_1).
Signature dual(const Signature& lambda);

}  // namespace steinchar
