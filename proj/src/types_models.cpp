#include "mseg/types_models.hpp"

#include "mseg/error.hpp"
#include "mseg/involution.hpp"

namespace mseg {

Partition lengths_partition(const Multisegment& m) {
  std::vector<int> parts;
  for (const auto& s : m.segments()) parts.insert(parts.end(), static_cast<std::size_t>(s.line().dim_k()), s.length());
  return Partition(std::move(parts));
}

Partition sl2_type(const Rep& r) {
  Partition total;
  for (const auto& f : r.factors()) {
    const auto& m = f.presentation == Presentation::Langlands ? mw_dual(f.m) : f.m;
    total = multiset_sum(total, lengths_partition(m));
  }
  return total;
}

Composition depth_sequence(const Rep& r) { return conjugate(sl2_type(r)).as_composition(); }

std::vector<int> whittaker_positions(const Composition& d, int n) {
  const Partition lambda = d.to_partition();
  if (n < 1 || lambda.degree() != n)
    throw Error(ErrorCode::BadComposition,
                "composition " + to_string(d) + " does not sum to n = " + std::to_string(n));
  std::vector<bool> excluded(static_cast<std::size_t>(n), false);
  int partial = 0;
  for (int part : lambda.parts()) {
    partial += part;
    excluded[static_cast<std::size_t>(n - partial)] = true;
  }
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (!excluded[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

}  // namespace mseg
