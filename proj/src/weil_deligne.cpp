#include "mseg/weil_deligne.hpp"

#include <algorithm>

#include "mseg/error.hpp"

namespace mseg {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(const std::vector<std::vector<mpq_class>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

std::size_t ExactMatrix::rank() const {
  // Clear denominators row by row (rank is unchanged), then eliminate over Z
  // with cross-multiplication; rows are divided by their content to keep
  // entries small.
  std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpz_class& den = (*this)(i, j).get_den();
      if (den != 1) l = lcm(l, den);
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpq_class& x = (*this)(i, j);
      if (sgn(x) != 0) a[i][j] = x.get_num() * (l / x.get_den());
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows_) continue;
    std::swap(a[rank], a[pivot]);
    const auto& prow = a[rank];
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const mpz_class g = gcd(prow[col], a[i][col]);
      const mpz_class keep = prow[col] / g;
      const mpz_class take = a[i][col] / g;
      mpz_class content = 0;
      for (std::size_t j = col; j < cols_; ++j) {
        a[i][j] = keep * a[i][j] - take * prow[j];
        if (sgn(a[i][j]) != 0) content = gcd(content, a[i][j]);
      }
      if (content > 1)
        for (std::size_t j = col; j < cols_; ++j) a[i][j] /= content;
    }
    ++rank;
  }
  return rank;
}

ExactMatrix ExactMatrix::scaled(const mpq_class& c) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  ExactMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const mpq_class& x = lhs(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const mpq_class& y = rhs(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  return out;
}

bool operator==(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

ExactMatrix block_diagonal(std::span<const ExactMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

ExactMatrix nilpotent_of(const Multisegment& m) {
  std::vector<ExactMatrix> blocks;
  blocks.reserve(m.size());
  for (const auto& s : m.segments()) {
    const auto k = static_cast<std::size_t>(s.line().dim_k());
    const auto len = static_cast<std::size_t>(s.length());
    ExactMatrix block(len * k, len * k);
    for (std::size_t i = 0; i + 1 < len; ++i)
      for (std::size_t r = 0; r < k; ++r) block((i + 1) * k + r, i * k + r) = 1;
    blocks.push_back(std::move(block));
  }
  return block_diagonal(blocks);
}

std::vector<std::size_t> power_ranks(const ExactMatrix& n) {
  if (!n.is_square()) throw Error(ErrorCode::DimensionMismatch, "nilpotent matrix must be square");
  std::vector<std::size_t> ranks{n.rows()};
  ExactMatrix power = n;
  while (ranks.back() != 0) {
    const std::size_t r = power.rank();
    if (r == ranks.back()) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
    ranks.push_back(r);
    if (r != 0) power = power * n;
  }
  return ranks;
}

Partition jordan_partition(const ExactMatrix& n) {
  const auto ranks = power_ranks(n);
  // at_least[j] = number of Jordan blocks of size >= j.
  std::vector<std::size_t> at_least(ranks.size() + 1, 0);
  for (std::size_t j = 1; j < ranks.size(); ++j) at_least[j] = ranks[j - 1] - ranks[j];
  std::vector<int> parts;
  for (std::size_t j = 1; j < ranks.size(); ++j)
    parts.insert(parts.end(), at_least[j] - at_least[j + 1], static_cast<int>(j));
  return Partition(std::move(parts));
}

ExactMatrix induced_block(const ExactMatrix& n, std::span<const mpq_class> scalars) {
  std::vector<ExactMatrix> blocks;
  blocks.reserve(scalars.size());
  for (const auto& c : scalars) {
    if (sgn(c) == 0) throw Error(ErrorCode::ZeroScalar, "induced block scalars must be nonzero");
    blocks.push_back(n.scaled(c));
  }
  return block_diagonal(blocks);
}

}  // namespace mseg
