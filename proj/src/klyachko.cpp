#include "mseg/klyachko.hpp"

#include <algorithm>
#include <cstdlib>

#include "mseg/error.hpp"

namespace mseg {

namespace {

using Shape = std::vector<std::pair<int, int>>;

Shape in_ladder_order(std::span<const std::pair<int, int>> shape) {
  Shape out(shape.begin(), shape.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second > y.second;
  });
  return out;
}

std::optional<std::int64_t> right_aligned_label(std::pair<int, int> lower, std::pair<int, int> upper, int dim_k) {
  const auto [a_low, b_low] = lower;
  const auto [a_up, b_up] = upper;
  if (a_up >= a_low + 1 && b_up == b_low + 1) return std::int64_t{dim_k} * (a_up - a_low - 1);
  return std::nullopt;
}

// `run` is a proper ladder listed top (largest begin) first. Pairs are taken
// from the bottom; an odd top segment contributes its full degree.
std::optional<std::int64_t> proper_type(std::span<const std::pair<int, int>> run, int dim_k,
                                        std::vector<std::int64_t>* labels) {
  const std::size_t t = run.size();
  std::int64_t r = 0;
  for (std::size_t i = 0; i < t / 2; ++i) {
    const auto lower = run[t - 1 - 2 * i];
    const auto upper = run[t - 2 - 2 * i];
    const auto label = right_aligned_label(lower, upper, dim_k);
    if (!label) return std::nullopt;
    if (labels != nullptr) labels->push_back(*label);
    r += *label;
  }
  if (t % 2 == 1) r += std::int64_t{dim_k} * (run[0].second - run[0].first + 1);
  return r;
}

std::optional<std::int64_t> ladder_type_impl(std::span<const std::pair<int, int>> shape, int dim_k,
                                             std::vector<std::int64_t>* labels) {
  const Shape ordered = in_ladder_order(shape);
  std::int64_t total = 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= ordered.size(); ++i) {
    if (i == ordered.size() || ordered[i - 1].first > ordered[i].second + 1) {
      const auto part = proper_type(std::span(ordered).subspan(start, i - start), dim_k, labels);
      if (!part) return std::nullopt;
      total += *part;
      start = i;
    }
  }
  return total;
}

int dim_of(const Multisegment& m) { return m.empty() ? 1 : m.segments().front().line().dim_k(); }

}  // namespace

KlyachkoResult KlyachkoResult::admits(std::int64_t r, std::vector<std::int64_t> pair_labels) {
  KlyachkoResult out(Tag::Admits);
  out.r_ = r;
  out.labels_ = std::move(pair_labels);
  return out;
}

bool KlyachkoResult::consistent_with_degree(std::int64_t degree) const noexcept {
  if (tag_ != Tag::Admits) return true;
  return r_ >= 0 && r_ <= degree && (degree - r_) % 2 == 0;
}

std::optional<std::int64_t> right_aligned(const Segment& lower, const Segment& upper) {
  if (lower.line() != upper.line())
    throw Error(ErrorCode::DifferentLines, "right alignment compares segments on one cuspidal line");
  return right_aligned_label({lower.a(), lower.b()}, {upper.a(), upper.b()}, lower.line().dim_k());
}

KlyachkoResult klyachko_proper_ladder(const Multisegment& m) {
  if (!is_proper_ladder(m)) throw Error(ErrorCode::NotProperLadder, "multisegment is not a proper ladder");
  std::vector<std::int64_t> labels;
  const Shape ordered = in_ladder_order(m.shape());
  const auto r = proper_type(ordered, dim_of(m), &labels);
  if (!r) return KlyachkoResult::no_model();
  return KlyachkoResult::admits(*r, std::move(labels));
}

KlyachkoResult klyachko_ladder(const Multisegment& m) {
  if (!is_ladder(m)) throw Error(ErrorCode::NotALadder, "multisegment is not a ladder");
  std::vector<std::int64_t> labels;
  const auto r = ladder_type_impl(m.shape(), dim_of(m), &labels);
  if (!r) return KlyachkoResult::no_model();
  return KlyachkoResult::admits(*r, std::move(labels));
}

KlyachkoResult klyachko_product(std::span<const std::pair<CuspidalLine, KlyachkoResult>> factors) {
  bool all_admit = true;
  bool any_no_model = false;
  std::int64_t total = 0;
  std::vector<std::int64_t> labels;
  std::vector<CuspidalLine> lines;
  for (const auto& [line, result] : factors) {
    lines.push_back(line);
    if (result.is_admits()) {
      total += result.r();
      labels.insert(labels.end(), result.pair_labels().begin(), result.pair_labels().end());
    } else {
      all_admit = false;
      any_no_model = any_no_model || result.tag() == KlyachkoResult::Tag::NoModel;
    }
  }
  if (all_admit) return KlyachkoResult::admits(total, std::move(labels));
  std::sort(lines.begin(), lines.end());
  const bool distinct = std::adjacent_find(lines.begin(), lines.end()) == lines.end();
  if (distinct && any_no_model) return KlyachkoResult::no_model();
  return KlyachkoResult::unknown();
}

KlyachkoResult klyachko_rep(const Rep& r) {
  std::vector<std::pair<CuspidalLine, KlyachkoResult>> parts;
  const Rep normal = r.langlands_form();
  for (const auto& f : normal.factors()) {
    if (is_ladder(f.m))
      parts.emplace_back(f.line(), klyachko_ladder(f.m));
    else
      parts.emplace_back(f.line(), KlyachkoResult::unknown());
  }
  return klyachko_product(parts);
}

Rep tadic_product(std::span<const TadicFactor> factors) {
  std::vector<RepFactor> pieces;
  for (const auto& f : factors) {
    if (f.speh.empty() || !is_speh(f.speh))
      throw Error(ErrorCode::NotTadicForm, "Tadic factor is not a Speh multisegment");
    if (f.alpha_den == 0) throw Error(ErrorCode::NotTadicForm, "complementary exponent has zero denominator");
    if (f.alpha_num == 0) {
      pieces.push_back(RepFactor{Presentation::Langlands, f.speh});
      continue;
    }
    // 0 < |alpha| < 1/2
    if (std::llabs(2 * f.alpha_num) >= std::llabs(f.alpha_den))
      throw Error(ErrorCode::NotTadicForm, "complementary exponent must lie in (-1/2, 1/2)");
    pieces.push_back(RepFactor{Presentation::Langlands, twist_by(f.speh, f.alpha_num, f.alpha_den)});
    pieces.push_back(RepFactor{Presentation::Langlands, twist_by(f.speh, -f.alpha_num, f.alpha_den)});
  }
  std::vector<CuspidalLine> lines;
  for (const auto& p : pieces) lines.push_back(p.line());
  std::sort(lines.begin(), lines.end());
  const bool distinct = std::adjacent_find(lines.begin(), lines.end()) == lines.end();
  return Rep(std::move(pieces), distinct ? Irreducibility::FromDistinctLines : Irreducibility::Asserted);
}

KlyachkoResult klyachko_unitarizable(std::span<const TadicFactor> factors) {
  return klyachko_unitarizable(tadic_product(factors));
}

KlyachkoResult klyachko_unitarizable(const Rep& r) {
  std::int64_t total = 0;
  std::vector<std::int64_t> labels;
  for (const auto& f : r.factors()) {
    if (f.presentation != Presentation::Langlands || !is_speh(f.m))
      throw Error(ErrorCode::NotTadicForm, "every factor must be a Langlands-presented Speh multisegment");
    const auto part = klyachko_ladder(f.m);
    // Speh multisegments always pair up by unit shifts.
    total += part.r();
    labels.insert(labels.end(), part.pair_labels().begin(), part.pair_labels().end());
  }
  return KlyachkoResult::admits(total, std::move(labels));
}

namespace detail {

std::optional<std::int64_t> ladder_type(std::span<const std::pair<int, int>> shape, int dim_k) {
  return ladder_type_impl(shape, dim_k, nullptr);
}

}  // namespace detail

}  // namespace mseg
