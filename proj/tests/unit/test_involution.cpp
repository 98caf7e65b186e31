#include <doctest.h>

#include "../generators.hpp"
#include "../oracles.hpp"
#include "mseg/involution.hpp"

using namespace mseg;

namespace {
const CuspidalLine rho = gen::plain_line("rho", 1);
oracle::Shape sorted_shape(const Multisegment& m) {
  auto s = m.shape();
  std::sort(s.begin(), s.end());
  return s;
}
// [a,b] -> [-b,-a]; the involution commutes with this reflection.
Multisegment reflect(const Multisegment& m) {
  std::vector<Segment> out;
  for (const auto& s : m.segments()) out.emplace_back(s.line(), -s.b(), -s.a());
  return Multisegment(std::move(out));
}
}  // namespace

TEST_CASE("hand-traced duals") {
  CHECK(mw_dual(Multisegment(rho, {{0, 1}})) == Multisegment(rho, {{1, 1}, {0, 0}}));
  CHECK(mw_dual(Multisegment(rho, {{1, 3}, {0, 2}})) == Multisegment(rho, {{2, 3}, {1, 2}, {0, 1}}));
  CHECK(mw_dual(Multisegment(rho, {{0, 0}})) == Multisegment(rho, {{0, 0}}));
  CHECK(mw_dual(Multisegment{}).empty());
  // Repeated segments: two copies of a point stay two points, and a pair of
  // linked points dualizes to the segment they span.
  CHECK(mw_dual(Multisegment(rho, {{0, 0}, {0, 0}})) == Multisegment(rho, {{0, 0}, {0, 0}}));
  CHECK(mw_dual(Multisegment(rho, {{1, 1}, {0, 0}})) == Multisegment(rho, {{0, 1}}));
  CHECK(mw_dual(Multisegment(rho, {{1, 1}, {0, 0}, {0, 0}})) == Multisegment(rho, {{0, 1}, {0, 0}}));
}

TEST_CASE("non-rigid input is dualized line by line") {
  const auto tau = gen::plain_line("tau", 2);
  const Multisegment m({Segment(rho, 0, 1), Segment(tau, 0, 1), Segment(tau, 1, 2)});
  const auto t = mw_dual(m);
  CHECK(t.restricted_to(rho) == mw_dual(m.restricted_to(rho)));
  CHECK(t.restricted_to(tau) == mw_dual(m.restricted_to(tau)));
}

TEST_CASE("dual presentations") {
  const Multisegment m(rho, {{0, 1}});
  CHECK(dual_presentation(Rep::zelevinsky(m), DualMode::SwapFlag) == Rep::langlands(m));
  CHECK(dual_presentation(Rep::langlands(m), DualMode::Normalize) ==
        Rep::zelevinsky(Multisegment(rho, {{1, 1}, {0, 0}})));
  CHECK(zelevinsky_dual(Rep::langlands(m)) == Rep::langlands(Multisegment(rho, {{1, 1}, {0, 0}})));
  const auto tau = gen::plain_line("tau", 1);
  const Rep product = Rep::langlands(m) * Rep::zelevinsky(Multisegment(tau, {{0, 2}}));
  CHECK(dual_presentation(product, DualMode::SwapFlag) ==
        Rep::zelevinsky(m) * Rep::langlands(Multisegment(tau, {{0, 2}})));
}

TEST_CASE("involution properties on random rigid multisegments") {
  gen::Rng rng(21);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto line = gen::random_plain_line(rng);
    const auto m = gen::random_rigid(rng, line, 30);
    const auto t = mw_dual(m);
    CHECK(mw_dual(t) == m);
    CHECK(t.degree() == m.degree());
    CHECK(oracle::support(t.shape()) == oracle::support(m.shape()));
    CHECK(mw_dual(reflect(m)) == reflect(t));
  }
}

TEST_CASE("ladders, Speh multisegments and single segments") {
  gen::Rng rng(22);
  for (int iter = 0; iter < 300; ++iter) CHECK(is_ladder(mw_dual(gen::random_ladder(rng, rho, gen::uniform(rng, 1, 7)))));
  for (int t = 1; t <= 6; ++t)
    for (int len = 1; len <= 6; ++len) {
      const int a = gen::uniform(rng, -3, 3);
      const auto m = speh(rho, a, len, t);
      CHECK(sorted_shape(mw_dual(m)) == oracle::speh_transpose(a, a + len - 1, t));
    }
  for (int a = -2; a <= 2; ++a)
    for (int b = a; b <= a + 5; ++b) {
      oracle::Shape points;
      for (int i = a; i <= b; ++i) points.emplace_back(i, i);
      CHECK(sorted_shape(mw_dual(Multisegment(rho, {{a, b}}))) == points);
    }
}
