#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mseg/segment.hpp"

namespace mseg {

/// L(m) (Langlands quotient) or Z(m) (Zelevinsky subrepresentation).
enum class Presentation { Langlands, Zelevinsky };

struct RepFactor {
  Presentation presentation = Presentation::Langlands;
  Multisegment m;  // rigid, non-empty

  const CuspidalLine& line() const { return m.line(); }
  friend bool operator==(const RepFactor&, const RepFactor&) = default;
};

/// Whether the caller vouches for irreducibility of a product whose factors
/// share a cuspidal line.
enum class Irreducibility { FromDistinctLines, Asserted };

/// An irreducible representation written as a product of rigid pieces.
///
/// Factors on pairwise distinct lines give an irreducible product; a product
/// with a repeated line is only accepted with Irreducibility::Asserted.
/// Factors are kept in a canonical order (by line, then presentation, then
/// multisegment) and empty factors are dropped.
class Rep {
 public:
  Rep() = default;
  explicit Rep(std::vector<RepFactor> factors,
               Irreducibility irreducibility = Irreducibility::FromDistinctLines);

  static Rep langlands(Multisegment m);
  static Rep zelevinsky(Multisegment m);

  std::span<const RepFactor> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  bool asserted_irreducible() const noexcept { return irreducibility_ == Irreducibility::Asserted; }
  Irreducibility irreducibility() const noexcept { return irreducibility_; }
  std::int64_t degree() const noexcept;
  bool has_distinct_lines() const;

  /// Same representation with every factor in Langlands form.
  Rep langlands_form() const;

  /// Formal product; lines must stay distinct unless either side asserted.
  friend Rep operator*(const Rep& lhs, const Rep& rhs);

  friend bool operator==(const Rep& lhs, const Rep& rhs) { return lhs.factors_ == rhs.factors_; }

 private:
  std::vector<RepFactor> factors_;
  Irreducibility irreducibility_ = Irreducibility::FromDistinctLines;
};

}  // namespace mseg
