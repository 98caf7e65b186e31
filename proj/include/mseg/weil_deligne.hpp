#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "mseg/partition.hpp"
#include "mseg/segment.hpp"

namespace mseg {

/// Dense matrix over Q with exact arithmetic.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch on ragged input.
  explicit ExactMatrix(const std::vector<std::vector<mpq_class>>& rows);

  static ExactMatrix zero(std::size_t n) { return ExactMatrix(n, n); }
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  /// Rank by fraction-free elimination on integer rows.
  std::size_t rank() const;

  ExactMatrix scaled(const mpq_class& c) const;
  friend ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
  friend bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Block diagonal assembly.
ExactMatrix block_diagonal(std::span<const ExactMatrix> blocks);

/// Nilpotent monodromy of the parameter of L(m): one block per segment,
/// k x k identity blocks on the block subdiagonal.
ExactMatrix nilpotent_of(const Multisegment& m);

/// rank(N^j) for j = 0, 1, ... up to and including the first zero power.
/// Throws NotNilpotent, DimensionMismatch.
std::vector<std::size_t> power_ranks(const ExactMatrix& n);

/// Jordan type of a nilpotent matrix from its rank sequence.
Partition jordan_partition(const ExactMatrix& n);

/// diag(c_1 N, ..., c_d N). Throws ZeroScalar.
ExactMatrix induced_block(const ExactMatrix& n, std::span<const mpq_class> scalars);

}  // namespace mseg
