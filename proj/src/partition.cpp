#include "mseg/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "mseg/error.hpp"

namespace mseg {

namespace {

std::string join(std::span<const int> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + ")";
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("partition parts must be non-negative");
  std::erase(parts_, 0);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t Partition::degree() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Composition Partition::as_composition() const { return Composition(parts_); }

Composition::Composition(std::initializer_list<int> entries)
    : Composition(std::vector<int>(entries)) {}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  if (std::any_of(entries_.begin(), entries_.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("composition entries must be non-negative");
}

std::int64_t Composition::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool Composition::is_non_increasing() const noexcept {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

Composition Composition::trimmed() const {
  auto out = entries_;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return Composition(std::move(out));
}

Partition Composition::to_partition() const {
  const auto t = trimmed();
  if (!t.is_non_increasing() || std::find(t.entries_.begin(), t.entries_.end(), 0) != t.entries_.end())
    throw Error(ErrorCode::BadComposition,
                "composition " + to_string(*this) + " is not a weakly decreasing sequence of positive parts");
  return Partition(t.entries_);
}

bool operator==(const Composition& lhs, const Composition& rhs) {
  return lhs.trimmed().entries_ == rhs.trimmed().entries_;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Composition add_pointwise(const Composition& lhs, const Composition& rhs) {
  std::vector<int> out(std::max(lhs.size(), rhs.size()), 0);
  for (std::size_t i = 0; i < lhs.size(); ++i) out[i] += lhs.entries()[i];
  for (std::size_t i = 0; i < rhs.size(); ++i) out[i] += rhs.entries()[i];
  return Composition(std::move(out));
}

Partition scale_multiplicity(int copies, const Partition& p) {
  if (copies < 1) throw std::invalid_argument("scale_multiplicity needs a positive factor");
  std::vector<int> out;
  out.reserve(p.length() * static_cast<std::size_t>(copies));
  for (int part : p.parts()) out.insert(out.end(), static_cast<std::size_t>(copies), part);
  return Partition(std::move(out));
}

Partition multiset_sum(const Partition& lhs, const Partition& rhs) {
  std::vector<int> out(lhs.parts().begin(), lhs.parts().end());
  out.insert(out.end(), rhs.parts().begin(), rhs.parts().end());
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const Composition& c) { return join(c.entries()); }

}  // namespace mseg
