#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mseg {

/// Fractional part of a real unramified twist: a reduced fraction in [0, 1).
class Offset {
 public:
  constexpr Offset() = default;
  /// Reduces `num/den` modulo 1 and returns the integral part that was
  /// removed through `carry` (so that num/den == carry + result).
  static Offset reduce(std::int64_t num, std::int64_t den, std::int64_t* carry = nullptr);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  friend bool operator==(const Offset&, const Offset&) = default;
  friend std::strong_ordering operator<=>(const Offset& lhs, const Offset& rhs);

 private:
  constexpr Offset(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class Field { Base, Extension };

struct Plain {
  friend auto operator<=>(const Plain&, const Plain&) = default;
};
struct SmallOrbitMember {
  std::string orbit;
  int index = 0;
  friend auto operator<=>(const SmallOrbitMember&, const SmallOrbitMember&) = default;
};
struct FixedBig {
  std::string orbit;
  friend auto operator<=>(const FixedBig&, const FixedBig&) = default;
};
using OrbitRole = std::variant<Plain, SmallOrbitMember, FixedBig>;

/// A symbolic cuspidal representation of GL_k over one of the two fields.
struct CuspidalAtom {
  std::string name;
  int dim_k = 1;
  Field side = Field::Base;
  OrbitRole role = Plain{};

  static CuspidalAtom plain(std::string name, int dim_k);

  friend bool operator==(const CuspidalAtom&, const CuspidalAtom&) = default;
  friend auto operator<=>(const CuspidalAtom&, const CuspidalAtom&) = default;
};

/// The set of integer twists of ν^offset · atom.
struct CuspidalLine {
  CuspidalAtom atom;
  Offset offset;

  int dim_k() const noexcept { return atom.dim_k; }

  friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
  friend auto operator<=>(const CuspidalLine&, const CuspidalLine&) = default;
};

/// Integer exponent range [a, b] on a line; never empty.
class Segment {
 public:
  /// Throws std::invalid_argument when a > b.
  Segment(CuspidalLine line, int a, int b);
  /// Empty when a > b.
  static std::optional<Segment> make(CuspidalLine line, int a, int b);

  const CuspidalLine& line() const noexcept { return line_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int length() const noexcept { return b_ - a_ + 1; }
  std::int64_t degree() const noexcept { return std::int64_t{length()} * line_.dim_k(); }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  CuspidalLine line_;
  int a_;
  int b_;
};

/// Standard-order comparison: end descending, begin descending, then line.
/// A segment that compares "less" is placed earlier.
bool standard_before(const Segment& lhs, const Segment& rhs) noexcept;

bool linked(const Segment& lhs, const Segment& rhs) noexcept;
bool precedes(const Segment& lhs, const Segment& rhs) noexcept;

/// A finite multiset of segments, kept sorted in standard order.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::vector<Segment> segments);
  /// Shape constructor: every (a, b) on the same line.
  Multisegment(const CuspidalLine& line, std::initializer_list<std::pair<int, int>> shape);
  Multisegment(const CuspidalLine& line, std::span<const std::pair<int, int>> shape);

  std::span<const Segment> segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }
  bool empty() const noexcept { return segments_.empty(); }
  std::int64_t degree() const noexcept;

  /// Lines present, sorted and deduplicated.
  std::vector<CuspidalLine> lines() const;
  /// The common line; throws NotRigid if there is none or more than one.
  const CuspidalLine& line() const;
  /// Sub-multisegment lying on `line`.
  Multisegment restricted_to(const CuspidalLine& line) const;
  /// (a, b) pairs in standard order; intended for rigid multisegments.
  std::vector<std::pair<int, int>> shape() const;

  friend Multisegment operator+(const Multisegment& lhs, const Multisegment& rhs);
  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Segments listed so that no earlier one precedes a later one.
std::vector<Segment> standard_order(const Multisegment& m);

bool is_rigid(const Multisegment& m);

/// Ladder predicates. Non-rigid input is never a ladder; the empty
/// multisegment is all three.
bool is_ladder(const Multisegment& m);
bool is_proper_ladder(const Multisegment& m);
bool is_speh(const Multisegment& m);

/// Segments of a rigid multisegment sorted by descending begin.
std::vector<Segment> ladder_order(const Multisegment& m);

/// Maximal consecutive runs with a_i <= b_{i+1} + 1. Throws NotALadder.
std::vector<Multisegment> proper_decomposition(const Multisegment& m);

/// No two segments linked.
bool is_generic(const Multisegment& m);

/// Same exponent data on `line`. Throws NotRigid.
Multisegment relocate(const Multisegment& m, const CuspidalLine& line);

/// Twist by ν^{num/den}: the line offset moves and integer carries shift
/// the exponents. Works segment by segment, so non-rigid input is fine.
Multisegment twist_by(const Multisegment& m, std::int64_t num, std::int64_t den);

/// Speh multisegment with `count` segments of the given length, top segment
/// starting at `top_begin`.
Multisegment speh(const CuspidalLine& line, int top_begin, int length, int count);

}  // namespace mseg
