#include "mseg/rep.hpp"

#include <algorithm>

#include "mseg/error.hpp"
#include "mseg/involution.hpp"

namespace mseg {

namespace {

bool factor_less(const RepFactor& x, const RepFactor& y) {
  if (auto c = x.line() <=> y.line(); c != 0) return c < 0;
  if (x.presentation != y.presentation) return x.presentation < y.presentation;
  return x.m.shape() < y.m.shape();
}

}  // namespace

Rep::Rep(std::vector<RepFactor> factors, Irreducibility irreducibility)
    : factors_(std::move(factors)), irreducibility_(irreducibility) {
  std::erase_if(factors_, [](const RepFactor& f) { return f.m.empty(); });
  for (const auto& f : factors_)
    if (!is_rigid(f.m)) throw Error(ErrorCode::NotRigid, "every factor of a Rep must be rigid");
  std::sort(factors_.begin(), factors_.end(), factor_less);
  if (irreducibility_ == Irreducibility::FromDistinctLines && !has_distinct_lines())
    throw Error(ErrorCode::NotIrreducible,
                "factors share a cuspidal line; irreducibility must be asserted explicitly");
}

Rep Rep::langlands(Multisegment m) { return Rep({RepFactor{Presentation::Langlands, std::move(m)}}); }

Rep Rep::zelevinsky(Multisegment m) { return Rep({RepFactor{Presentation::Zelevinsky, std::move(m)}}); }

std::int64_t Rep::degree() const noexcept {
  std::int64_t total = 0;
  for (const auto& f : factors_) total += f.m.degree();
  return total;
}

bool Rep::has_distinct_lines() const {
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
    if (factors_[i].line() == factors_[i + 1].line()) return false;
  return true;
}

Rep Rep::langlands_form() const {
  std::vector<RepFactor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.presentation == Presentation::Langlands)
      out.push_back(f);
    else
      out.push_back(RepFactor{Presentation::Langlands, mw_dual(f.m)});
  }
  return Rep(std::move(out), irreducibility_);
}

Rep operator*(const Rep& lhs, const Rep& rhs) {
  std::vector<RepFactor> all(lhs.factors_.begin(), lhs.factors_.end());
  all.insert(all.end(), rhs.factors_.begin(), rhs.factors_.end());
  const bool asserted = lhs.asserted_irreducible() || rhs.asserted_irreducible();
  return Rep(std::move(all), asserted ? Irreducibility::Asserted : Irreducibility::FromDistinctLines);
}

}  // namespace mseg
