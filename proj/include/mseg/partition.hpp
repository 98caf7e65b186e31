#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mseg {

class Composition;

/// A partition of a non-negative integer, stored weakly decreasing.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Parts may be given in any order; zeros are dropped. Negative parts throw.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::int64_t degree() const noexcept;
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Composition as_composition() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An ordered list of non-negative integers. Equality ignores trailing zeros.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> entries);
  explicit Composition(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t degree() const noexcept;
  bool is_non_increasing() const noexcept;

  /// Trailing zeros removed.
  Composition trimmed() const;
  /// Throws BadComposition unless the positive entries are weakly decreasing
  /// and followed only by zeros.
  Partition to_partition() const;

  friend bool operator==(const Composition& lhs, const Composition& rhs);

 private:
  std::vector<int> entries_;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Entrywise sum; the shorter operand is zero-padded.
Composition add_pointwise(const Composition& lhs, const Composition& rhs);

/// Every part repeated `copies` times.
Partition scale_multiplicity(int copies, const Partition& p);

/// Multiset union of parts.
Partition multiset_sum(const Partition& lhs, const Partition& rhs);

std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

}  // namespace mseg
