#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mseg/rep.hpp"
#include "mseg/segment.hpp"

namespace mseg {

/// Outcome of a Klyachko-type computation.
///
/// `Admits(r)` means a model of type r exists (r = 0 symplectic, r = n
/// Whittaker). `Unknown` is reserved for same-line products whose factors
/// do not all admit a model: the combinatorics cannot decide those.
class KlyachkoResult {
 public:
  enum class Tag { Admits, NoModel, Unknown };

  static KlyachkoResult admits(std::int64_t r, std::vector<std::int64_t> pair_labels = {});
  static KlyachkoResult no_model() { return KlyachkoResult(Tag::NoModel); }
  static KlyachkoResult unknown() { return KlyachkoResult(Tag::Unknown); }

  Tag tag() const noexcept { return tag_; }
  bool is_admits() const noexcept { return tag_ == Tag::Admits; }
  /// Only meaningful for Admits.
  std::int64_t r() const noexcept { return r_; }
  /// Right-aligned labels r_i of the pairs that witnessed the model.
  std::span<const std::int64_t> pair_labels() const noexcept { return labels_; }

  /// r <= degree and r has the parity of degree.
  bool consistent_with_degree(std::int64_t degree) const noexcept;

  friend bool operator==(const KlyachkoResult& lhs, const KlyachkoResult& rhs) noexcept {
    return lhs.tag_ == rhs.tag_ && lhs.r_ == rhs.r_;
  }

 private:
  explicit KlyachkoResult(Tag tag) : tag_(tag) {}
  Tag tag_ = Tag::NoModel;
  std::int64_t r_ = 0;
  std::vector<std::int64_t> labels_;
};

/// Label r of lower |-_r upper, i.e. dim_k * (a - a' - 1) when a >= a' + 1
/// and b = b' + 1. Throws DifferentLines.
std::optional<std::int64_t> right_aligned(const Segment& lower, const Segment& upper);

/// Throws NotProperLadder.
KlyachkoResult klyachko_proper_ladder(const Multisegment& m);

/// Throws NotALadder.
KlyachkoResult klyachko_ladder(const Multisegment& m);

/// Combines factor results. On pairwise distinct lines the product admits a
/// model iff every factor does; with a repeated line a failing factor leaves
/// the answer Unknown.
KlyachkoResult klyachko_product(std::span<const std::pair<CuspidalLine, KlyachkoResult>> factors);

/// Klyachko type of an irreducible Rep. Factors that are ladders (in
/// Langlands form) are classified exactly; any other factor is Unknown.
KlyachkoResult klyachko_rep(const Rep& r);

/// One factor of a unitary product: the Speh `speh` when alpha = 0, or the
/// complementary pair ν^alpha speh x ν^-alpha speh with 0 < |alpha| < 1/2.
struct TadicFactor {
  Multisegment speh;
  std::int64_t alpha_num = 0;
  std::int64_t alpha_den = 1;
};

/// Product of Speh factors and complementary pairs. Throws NotTadicForm.
/// The result is marked Asserted when two pieces share a line.
Rep tadic_product(std::span<const TadicFactor> factors);

/// Throws NotTadicForm.
KlyachkoResult klyachko_unitarizable(std::span<const TadicFactor> factors);
/// Rep variant: every factor must be a Langlands-presented Speh multisegment.
KlyachkoResult klyachko_unitarizable(const Rep& r);

namespace detail {
/// Shape-level classifier used by the fiber counters: a ladder given as
/// (a, b) pairs on a line of dimension dim_k. nullopt means no model.
std::optional<std::int64_t> ladder_type(std::span<const std::pair<int, int>> shape, int dim_k);
}  // namespace detail

}  // namespace mseg
