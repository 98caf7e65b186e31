#include "mseg/segment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mseg/error.hpp"

namespace mseg {

Offset Offset::reduce(std::int64_t num, std::int64_t den, std::int64_t* carry) {
  if (den == 0) throw std::invalid_argument("offset denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r < 0) {
    r += den;
    --q;
  }
  if (carry != nullptr) *carry = q;
  if (r == 0) return Offset{};
  const std::int64_t g = std::gcd(r, den);
  return Offset(r / g, den / g);
}

__extension__ using Wide = __int128;

std::strong_ordering operator<=>(const Offset& lhs, const Offset& rhs) {
  const Wide l = static_cast<Wide>(lhs.num_) * rhs.den_;
  const Wide r = static_cast<Wide>(rhs.num_) * lhs.den_;
  return l <=> r;
}

CuspidalAtom CuspidalAtom::plain(std::string name, int dim_k) {
  if (dim_k < 1) throw std::invalid_argument("cuspidal dimension must be positive");
  return CuspidalAtom{std::move(name), dim_k, Field::Base, Plain{}};
}

Segment::Segment(CuspidalLine line, int a, int b) : line_(std::move(line)), a_(a), b_(b) {
  if (a > b) throw std::invalid_argument("segment [" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
}

std::optional<Segment> Segment::make(CuspidalLine line, int a, int b) {
  if (a > b) return std::nullopt;
  return Segment(std::move(line), a, b);
}

bool standard_before(const Segment& lhs, const Segment& rhs) noexcept {
  if (lhs.b() != rhs.b()) return lhs.b() > rhs.b();
  if (lhs.a() != rhs.a()) return lhs.a() > rhs.a();
  return lhs.line() < rhs.line();
}

bool linked(const Segment& lhs, const Segment& rhs) noexcept {
  if (lhs.line() != rhs.line()) return false;
  const bool lhs_in_rhs = rhs.a() <= lhs.a() && lhs.b() <= rhs.b();
  const bool rhs_in_lhs = lhs.a() <= rhs.a() && rhs.b() <= lhs.b();
  if (lhs_in_rhs || rhs_in_lhs) return false;
  return std::max(lhs.a(), rhs.a()) <= std::min(lhs.b(), rhs.b()) + 1;
}

bool precedes(const Segment& lhs, const Segment& rhs) noexcept {
  return linked(lhs, rhs) && lhs.a() < rhs.a();
}

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::stable_sort(segments_.begin(), segments_.end(), standard_before);
}

Multisegment::Multisegment(const CuspidalLine& line, std::initializer_list<std::pair<int, int>> shape)
    : Multisegment(line, std::span<const std::pair<int, int>>(shape.begin(), shape.size())) {}

Multisegment::Multisegment(const CuspidalLine& line, std::span<const std::pair<int, int>> shape) {
  segments_.reserve(shape.size());
  for (auto [a, b] : shape) segments_.emplace_back(line, a, b);
  std::stable_sort(segments_.begin(), segments_.end(), standard_before);
}

std::int64_t Multisegment::degree() const noexcept {
  std::int64_t total = 0;
  for (const auto& s : segments_) total += s.degree();
  return total;
}

std::vector<CuspidalLine> Multisegment::lines() const {
  std::vector<CuspidalLine> out;
  for (const auto& s : segments_) out.push_back(s.line());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const CuspidalLine& Multisegment::line() const {
  if (segments_.empty()) throw Error(ErrorCode::NotRigid, "empty multisegment has no cuspidal line");
  if (!is_rigid(*this)) throw Error(ErrorCode::NotRigid, "multisegment spans several cuspidal lines");
  return segments_.front().line();
}

Multisegment Multisegment::restricted_to(const CuspidalLine& line) const {
  std::vector<Segment> out;
  for (const auto& s : segments_)
    if (s.line() == line) out.push_back(s);
  return Multisegment(std::move(out));
}

std::vector<std::pair<int, int>> Multisegment::shape() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(segments_.size());
  for (const auto& s : segments_) out.emplace_back(s.a(), s.b());
  return out;
}

Multisegment operator+(const Multisegment& lhs, const Multisegment& rhs) {
  std::vector<Segment> all(lhs.segments_.begin(), lhs.segments_.end());
  all.insert(all.end(), rhs.segments_.begin(), rhs.segments_.end());
  return Multisegment(std::move(all));
}

std::vector<Segment> standard_order(const Multisegment& m) {
  return {m.segments().begin(), m.segments().end()};
}

bool is_rigid(const Multisegment& m) {
  const auto segs = m.segments();
  return std::all_of(segs.begin(), segs.end(),
                     [&](const Segment& s) { return s.line() == segs.front().line(); });
}

std::vector<Segment> ladder_order(const Multisegment& m) {
  std::vector<Segment> out(m.segments().begin(), m.segments().end());
  std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
    if (x.a() != y.a()) return x.a() > y.a();
    return x.b() > y.b();
  });
  return out;
}

bool is_ladder(const Multisegment& m) {
  if (!is_rigid(m)) return false;
  const auto segs = ladder_order(m);
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if (segs[i].a() <= segs[i + 1].a() || segs[i].b() <= segs[i + 1].b()) return false;
  return true;
}

bool is_proper_ladder(const Multisegment& m) {
  if (!is_ladder(m)) return false;
  const auto segs = ladder_order(m);
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if (segs[i].a() > segs[i + 1].b() + 1) return false;
  return true;
}

bool is_speh(const Multisegment& m) {
  if (!is_ladder(m)) return false;
  const auto segs = ladder_order(m);
  for (std::size_t i = 0; i + 1 < segs.size(); ++i)
    if (segs[i].a() != segs[i + 1].a() + 1 || segs[i].b() != segs[i + 1].b() + 1) return false;
  return true;
}

std::vector<Multisegment> proper_decomposition(const Multisegment& m) {
  if (!is_ladder(m)) throw Error(ErrorCode::NotALadder, "proper decomposition needs a ladder");
  const auto segs = ladder_order(m);
  std::vector<Multisegment> parts;
  std::vector<Segment> run;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0 && segs[i - 1].a() > segs[i].b() + 1) {
      parts.emplace_back(std::move(run));
      run.clear();
    }
    run.push_back(segs[i]);
  }
  if (!run.empty()) parts.emplace_back(std::move(run));
  return parts;
}

bool is_generic(const Multisegment& m) {
  const auto segs = m.segments();
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (linked(segs[i], segs[j])) return false;
  return true;
}

Multisegment relocate(const Multisegment& m, const CuspidalLine& line) {
  if (!is_rigid(m)) throw Error(ErrorCode::NotRigid, "relocate needs a rigid multisegment");
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m.segments()) out.emplace_back(line, s.a(), s.b());
  return Multisegment(std::move(out));
}

Multisegment twist_by(const Multisegment& m, std::int64_t num, std::int64_t den) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m.segments()) {
    const auto& off = s.line().offset;
    std::int64_t carry = 0;
    CuspidalLine line = s.line();
    line.offset = Offset::reduce(off.num() * den + num * off.den(), off.den() * den, &carry);
    out.emplace_back(std::move(line), s.a() + static_cast<int>(carry), s.b() + static_cast<int>(carry));
  }
  return Multisegment(std::move(out));
}

Multisegment speh(const CuspidalLine& line, int top_begin, int length, int count) {
  if (length < 1 || count < 0) throw std::invalid_argument("speh needs length >= 1 and count >= 0");
  std::vector<Segment> out;
  for (int i = 0; i < count; ++i) out.emplace_back(line, top_begin - i, top_begin - i + length - 1);
  return Multisegment(std::move(out));
}

}  // namespace mseg
