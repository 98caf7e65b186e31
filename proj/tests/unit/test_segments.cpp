#include <doctest.h>

#include "../generators.hpp"
#include "../oracles.hpp"
#include "mseg/error.hpp"
#include "mseg/segment.hpp"

using namespace mseg;

namespace {
const CuspidalLine rho = gen::plain_line("rho", 1);
const CuspidalLine tau = gen::plain_line("tau", 1);
Segment seg(int a, int b) { return Segment(rho, a, b); }
}  // namespace

TEST_CASE("offsets reduce into [0,1)") {
  std::int64_t carry = 0;
  auto off = Offset::reduce(5, 4, &carry);
  CHECK(off.num() == 1);
  CHECK(off.den() == 4);
  CHECK(carry == 1);
  off = Offset::reduce(-1, 4, &carry);
  CHECK(off.num() == 3);
  CHECK(carry == -1);
  off = Offset::reduce(2, 4, &carry);
  CHECK(off.num() == 1);
  CHECK(off.den() == 2);
  CHECK(Offset::reduce(3, 3, &carry).is_zero());
  CHECK(carry == 1);
  CHECK(Offset::reduce(1, 3) < Offset::reduce(1, 2));
}

TEST_CASE("segments") {
  CHECK_THROWS_AS(Segment(rho, 2, 1), std::invalid_argument);
  CHECK_FALSE(Segment::make(rho, 2, 1).has_value());
  const Segment s(gen::plain_line("r", 3), 0, 2);
  CHECK(s.length() == 3);
  CHECK(s.degree() == 9);
}

TEST_CASE("linked and precedes") {
  CHECK(linked(seg(0, 1), seg(1, 2)));
  CHECK_FALSE(linked(seg(0, 2), seg(1, 2)));
  CHECK_FALSE(linked(seg(0, 0), seg(2, 3)));
  CHECK(linked(seg(0, 0), seg(1, 1)));
  CHECK_FALSE(linked(seg(0, 1), Segment(tau, 1, 2)));
  CHECK(precedes(seg(0, 1), seg(1, 2)));
  CHECK_FALSE(precedes(seg(1, 2), seg(0, 1)));
  CHECK_FALSE(precedes(seg(0, 3), seg(1, 2)));
}

TEST_CASE("standard order") {
  auto listing = [](const Multisegment& m) {
    oracle::Shape out;
    for (const auto& s : standard_order(m)) out.emplace_back(s.a(), s.b());
    return out;
  };
  CHECK(listing(Multisegment(rho, {{0, 1}, {1, 2}})) == oracle::Shape{{1, 2}, {0, 1}});
  CHECK(listing(Multisegment(rho, {{0, 1}})) == oracle::Shape{{0, 1}});
  CHECK(listing(Multisegment(rho, {{2, 3}, {0, 4}})) == oracle::Shape{{0, 4}, {2, 3}});
  CHECK(oracle::all_standard_listings({{0, 1}, {1, 2}}).size() == 1);
  CHECK(oracle::all_standard_listings({{2, 3}, {0, 4}}).size() == 2);

  gen::Rng rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Segment> segs;
    const int n = gen::uniform(rng, 1, 6);
    for (int i = 0; i < n; ++i) {
      const int a = gen::uniform(rng, 0, 5);
      segs.emplace_back(rho, a, a + gen::uniform(rng, 0, 3));
    }
    const Multisegment m(segs);
    const auto got = listing(m);
    CHECK(oracle::is_standard_listing(got));
    CHECK(oracle::all_standard_listings(got).contains(got));
  }
}

TEST_CASE("rigidity and ladders") {
  CHECK(is_rigid(Multisegment(rho, {{0, 1}, {2, 3}})));
  CHECK(is_rigid(Multisegment{}));
  CHECK_FALSE(is_rigid(Multisegment({seg(0, 1), Segment(tau, 0, 1)})));
  CHECK_THROWS_AS(Multisegment({seg(0, 1), Segment(tau, 0, 1)}).line(), Error);

  const Multisegment m1(rho, {{2, 3}, {0, 1}});
  const Multisegment m2(rho, {{3, 4}, {0, 1}});
  CHECK(is_ladder(m1));
  CHECK(is_proper_ladder(m1));
  CHECK(is_ladder(m2));
  CHECK_FALSE(is_proper_ladder(m2));
  CHECK(is_speh(Multisegment(rho, {{2, 3}, {1, 2}, {0, 1}})));
  CHECK_FALSE(is_speh(m1));
  CHECK_FALSE(is_ladder(Multisegment(rho, {{1, 2}, {0, 2}})));
  CHECK_FALSE(is_ladder(Multisegment({seg(0, 1), Segment(tau, 2, 3)})));
  CHECK(is_ladder(Multisegment{}));
  CHECK(is_proper_ladder(Multisegment{}));
  CHECK(is_speh(Multisegment{}));
}

TEST_CASE("proper decomposition") {
  auto shapes = [](const Multisegment& m) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& part : proper_decomposition(m)) out.push_back(part.shape());
    return out;
  };
  using V = std::vector<std::vector<std::pair<int, int>>>;
  CHECK(shapes(Multisegment(rho, {{3, 4}, {0, 1}})) == V{{{3, 4}}, {{0, 1}}});
  CHECK(shapes(Multisegment(rho, {{2, 3}, {1, 2}, {0, 1}})) == V{{{2, 3}, {1, 2}, {0, 1}}});
  CHECK(shapes(Multisegment(rho, {{5, 6}, {4, 5}, {0, 1}})) == V{{{5, 6}, {4, 5}}, {{0, 1}}});
  CHECK_THROWS_AS(proper_decomposition(Multisegment(rho, {{1, 2}, {0, 2}})), Error);

  gen::Rng rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    const auto m = gen::random_ladder(rng, rho, gen::uniform(rng, 1, 7));
    const auto parts = proper_decomposition(m);
    Multisegment sum;
    for (const auto& p : parts) {
      CHECK(is_proper_ladder(p));
      sum = sum + p;
    }
    CHECK(sum == m);
    CHECK((parts.size() == 1) == is_proper_ladder(m));
  }
}

TEST_CASE("genericity") {
  CHECK(is_generic(Multisegment(rho, {{3, 4}, {0, 1}})));
  CHECK_FALSE(is_generic(Multisegment(rho, {{2, 3}, {0, 1}})));
  CHECK(is_generic(Multisegment(rho, {{0, 1}})));
  gen::Rng rng(2);
  for (int t = 2; t <= 5; ++t) CHECK_FALSE(is_generic(speh(rho, gen::uniform(rng, -2, 2), gen::uniform(rng, 1, 4), t)));
}

TEST_CASE("relocate and twist") {
  const Multisegment m(rho, {{2, 3}, {0, 1}});
  CHECK(relocate(m, tau) == Multisegment(tau, {{2, 3}, {0, 1}}));
  CHECK(relocate(Multisegment{}, tau).empty());
  CHECK_THROWS_AS(relocate(Multisegment({seg(0, 1), Segment(tau, 0, 1)}), tau), Error);
  const auto t = twist_by(m, 5, 4);
  CHECK(t.line().offset == Offset::reduce(1, 4));
  CHECK(t.shape() == std::vector<std::pair<int, int>>{{3, 4}, {1, 2}});
  CHECK(twist_by(t, -5, 4) == m);
  CHECK(twist_by(m, 2, 1).shape() == std::vector<std::pair<int, int>>{{4, 5}, {2, 3}});
}

TEST_CASE("ladder sub-multisets are ladders") {
  gen::Rng rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const auto m = gen::random_ladder(rng, rho, gen::uniform(rng, 1, 8));
    CHECK(is_ladder(m));
    std::vector<Segment> keep;
    for (const auto& s : m.segments())
      if (gen::coin(rng)) keep.push_back(s);
    CHECK(is_ladder(Multisegment(keep)));
  }
}

TEST_CASE("multisegment bookkeeping") {
  const Multisegment m({Segment(gen::plain_line("a", 2), 0, 1), Segment(tau, 3, 3), seg(0, 0)});
  CHECK(m.size() == 3);
  CHECK(m.degree() == 4 + 1 + 1);
  CHECK(m.lines().size() == 3);
  CHECK(m.restricted_to(tau).size() == 1);
  CHECK(speh(rho, 2, 2, 3) == Multisegment(rho, {{2, 3}, {1, 2}, {0, 1}}));
}
