#include <doctest.h>

#include "../generators.hpp"
#include "../oracles.hpp"
#include "mseg/error.hpp"
#include "mseg/fiber.hpp"
#include "mseg/klyachko.hpp"

using namespace mseg;

namespace {

struct Setup {
  ExtensionContext ctx;
  CuspidalLine fixed_e;
  CuspidalLine fixed_f;
};

Setup setup(int d, int k = 1) {
  ExtensionContext ctx(d);
  ctx.register_orbit({"A", k, OrbitKind::TypeI});
  ctx.register_orbit({"B", k, OrbitKind::TypeII});
  return Setup{ctx, CuspidalLine{ctx.fixed_e("A"), Offset{}}, CuspidalLine{ctx.fixed_f("B"), Offset{}}};
}

}  // namespace

TEST_CASE("fiber sizes") {
  const auto s2 = setup(2);
  CHECK(fiber_bc(Multisegment(s2.fixed_e, {{2, 3}, {1, 2}}), s2.ctx).size() == 4);
  const auto s3 = setup(3);
  CHECK(fiber_bc(Multisegment(s3.fixed_e, {{0, 1}}), s3.ctx).size() == 3);
  const auto empty = fiber_bc(Multisegment{}, s3.ctx);
  REQUIRE(empty.size() == 1);
  CHECK(empty.front().rep.empty());
  CHECK(fiber_ai(Multisegment(s3.fixed_f, {{0, 1}, {0, 0}}), s3.ctx).size() == 9);
}

TEST_CASE("fiber elements") {
  const auto s = setup(2);
  const Multisegment m(s.fixed_e, {{1, 1}, {0, 0}});
  const auto elements = fiber_bc(m, s.ctx);
  REQUIRE(elements.size() == 4);
  CHECK(elements[0].assignment == std::vector<int>{0, 0});
  CHECK(elements[1].assignment == std::vector<int>{0, 1});
  CHECK(elements[3].assignment == std::vector<int>{1, 1});
  for (const auto& e : elements) {
    CHECK(e.parts.size() == 2);
    // Split elements put two factors over one FixedE line, which bc refuses
    // to compute factorwise; the unsplit ones map back directly.
    if (e.rep.factors().size() == 1)
      CHECK(bc(e.rep, s.ctx) == Rep::langlands(m));
    else
      CHECK_THROWS_AS(bc(e.rep, s.ctx), Error);
    Multisegment joined;
    for (const auto& p : e.parts) joined = joined + relocate(p, s.fixed_e);
    CHECK(joined == m);
  }
}

TEST_CASE("repeated segments are deduplicated") {
  const auto s = setup(2);
  const Multisegment m(s.fixed_e, {{0, 0}, {0, 0}});
  CHECK(fiber_bc(m, s.ctx).size() == 3);
  CHECK(oracle::brute_fiber(m.shape(), 2, 1, std::nullopt).size == 3);
  const auto s3 = setup(3);
  const Multisegment m3(s3.fixed_e, {{1, 2}, {0, 0}, {0, 0}});
  CHECK(fiber_bc(m3, s3.ctx).size() == oracle::brute_fiber(m3.shape(), 3, 1, std::nullopt).size);
}

TEST_CASE("fiber errors") {
  const auto s = setup(2);
  CHECK_THROWS_AS(fiber_bc(Multisegment(s.fixed_f, {{0, 0}}), s.ctx), Error);
  CHECK_THROWS_AS(fiber_ai(Multisegment(s.fixed_e, {{0, 0}}), s.ctx), Error);
  CHECK_THROWS_AS(fiber_bc(Multisegment(gen::plain_line("p", 1), {{0, 0}}), s.ctx), Error);
  const Multisegment not_rigid({Segment(s.fixed_e, 0, 0), Segment(gen::plain_line("p", 1), 0, 0)});
  CHECK_THROWS_AS(fiber_bc(not_rigid, s.ctx), Error);
  CHECK_THROWS_AS(count_klyachko_fiber_bc(Multisegment(s.fixed_e, {{1, 2}, {0, 2}}), s.ctx), Error);
  CHECK_THROWS_AS(count_klyachko_fiber_bc(Multisegment(s.fixed_e, {{1, 3}, {0, 1}}), s.ctx), Error);
  // On a FixedF line of dimension k*d every type is a multiple of d, so the
  // division always succeeds through the public entry points.
  CHECK_NOTHROW(count_klyachko_fiber_ai(Multisegment(s.fixed_f, {{0, 0}}), s.ctx));
}

TEST_CASE("Klyachko fiber counts") {
  const auto s2 = setup(2);
  const auto c1 = count_klyachko_fiber_bc(Multisegment(s2.fixed_e, {{2, 3}, {1, 2}}), s2.ctx);
  CHECK(c1.fiber_size == 4);
  CHECK(c1.d_count == 2);
  CHECK(c1.r_target == 0);
  const auto c2 = count_klyachko_fiber_bc(Multisegment(s2.fixed_e, {{2, 3}, {1, 2}, {0, 1}}), s2.ctx);
  CHECK(c2.fiber_size == 8);
  CHECK(c2.d_count == 6);
  CHECK(c2.r_target == 2);
  CHECK(count_klyachko_fiber_bc(Multisegment(s2.fixed_e, {{3, 4}, {0, 1}}), s2.ctx).d_count == 4);
  CHECK(count_klyachko_fiber_bc(Multisegment(s2.fixed_e, {{3, 4}, {1, 2}, {0, 1}}), s2.ctx).d_count == 4);
  CHECK(count_klyachko_fiber_bc(Multisegment{}, s2.ctx).d_count == 1);

  // A FixedF line of dimension k*d: the type is divided by d.
  const auto ai_count = count_klyachko_fiber_ai(Multisegment(s2.fixed_f, {{2, 3}, {1, 2}, {0, 1}}), s2.ctx);
  CHECK(ai_count.r_target == 2);
  CHECK(ai_count.d_count == 6);
}

TEST_CASE("speh count formula") {
  CHECK(speh_count_formula(2, 2) == 2);
  CHECK(speh_count_formula(3, 2) == 6);
  CHECK(speh_count_formula(3, 3) == 15);
  CHECK(speh_count_formula(1, 3) == 3);
  CHECK(speh_count_formula(0, 2) == 1);
  CHECK_THROWS(speh_count_formula(-1, 2));
}

TEST_CASE("counts agree with the brute-force oracle") {
  gen::Rng rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const int d = gen::coin(rng) ? 2 : 3;
    const int k = gen::uniform(rng, 1, 2);
    const auto s = setup(d, k);
    const int size = gen::uniform(rng, 1, d == 2 ? 7 : 5);
    const auto shape = gen::random_ladder_shape(rng, size, gen::uniform(rng, 0, 4), gen::uniform(rng, 0, 1));
    const bool via_ai = gen::coin(rng);
    const Multisegment m(via_ai ? s.fixed_f : s.fixed_e, shape);
    const int target_dim = m.line().dim_k();
    const auto r = oracle::klyachko_type(shape, target_dim);
    if (!r) {
      CHECK_THROWS_AS(count_klyachko_fiber_bc(Multisegment(s.fixed_e, shape), s.ctx), Error);
      continue;
    }
    const auto c = via_ai ? count_klyachko_fiber_ai(m, s.ctx) : count_klyachko_fiber_bc(m, s.ctx);
    const std::int64_t target = via_ai ? *r / d : *r;
    CHECK(c.r_target == target);
    const auto brute = oracle::brute_fiber(shape, d, k, target);
    CHECK(c.fiber_size == brute.size);
    CHECK(c.d_count == brute.d_count);
    CHECK(c.fiber_size == oracle::ipow(static_cast<std::uint64_t>(d), size));
  }
}
