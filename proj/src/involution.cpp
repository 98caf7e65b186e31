#include "mseg/involution.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace mseg {

namespace {

using Shape = std::vector<std::pair<int, int>>;

// Moeglin-Waldspurger on one line. Each round builds a chain starting from
// the shortest segment with the largest end; every next link ends one step
// lower, strictly precedes the previous link, and is the shortest such.
// A chain of length r contributes [e - r + 1, e]; its members lose their end.
Shape mw_dual_shape(Shape work) {
  Shape out;
  std::vector<std::size_t> chain;
  while (!work.empty()) {
    int e = work.front().second;
    for (const auto& s : work) e = std::max(e, s.second);

    chain.clear();
    std::vector<bool> used(work.size(), false);
    auto pick = [&](int end, int begin_bound, bool strict) -> bool {
      std::size_t best = work.size();
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (used[i] || work[i].second != end) continue;
        if (strict && work[i].first >= begin_bound) continue;
        if (best == work.size() || work[i].first > work[best].first) best = i;
      }
      if (best == work.size()) return false;
      used[best] = true;
      chain.push_back(best);
      return true;
    };
    pick(e, 0, false);
    while (pick(work[chain.back()].second - 1, work[chain.back()].first, true)) {
    }

    const int r = static_cast<int>(chain.size());
    out.emplace_back(e - r + 1, e);
    for (std::size_t i : chain) --work[i].second;
    std::erase_if(work, [](const auto& s) { return s.first > s.second; });
  }
  return out;
}

}  // namespace

Multisegment mw_dual(const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& line : m.lines()) {
    for (auto [a, b] : mw_dual_shape(m.restricted_to(line).shape())) out.emplace_back(line, a, b);
  }
  return Multisegment(std::move(out));
}

Rep dual_presentation(const Rep& r, DualMode mode) {
  std::vector<RepFactor> out;
  out.reserve(r.factors().size());
  for (const auto& f : r.factors()) {
    const auto flipped =
        f.presentation == Presentation::Langlands ? Presentation::Zelevinsky : Presentation::Langlands;
    if (mode == DualMode::SwapFlag)
      out.push_back(RepFactor{flipped, f.m});
    else
      out.push_back(RepFactor{flipped, mw_dual(f.m)});
  }
  return Rep(std::move(out), r.irreducibility());
}

Rep zelevinsky_dual(const Rep& r) { return dual_presentation(r, DualMode::SwapFlag).langlands_form(); }

}  // namespace mseg
