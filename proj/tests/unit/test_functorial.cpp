#include <doctest.h>

#include "../generators.hpp"
#include "mseg/error.hpp"
#include "mseg/functorial.hpp"
#include "mseg/involution.hpp"
#include "mseg/klyachko.hpp"
#include "mseg/types_models.hpp"

using namespace mseg;

namespace {

ExtensionContext make_context(int d) {
  ExtensionContext ctx(d);
  ctx.register_orbit({"A", 1, OrbitKind::TypeI});
  ctx.register_orbit({"B", 2, OrbitKind::TypeII});
  return ctx;
}

CuspidalLine on(CuspidalAtom atom) { return CuspidalLine{std::move(atom), Offset{}}; }

}  // namespace

TEST_CASE("contexts") {
  CHECK_THROWS_AS(ExtensionContext(4), Error);
  CHECK_THROWS_AS(ExtensionContext(1), Error);
  auto ctx = make_context(3);
  CHECK_THROWS_AS(ctx.register_orbit({"A", 1, OrbitKind::TypeII}), Error);
  CHECK_THROWS_AS(ctx.register_orbit({"C", 0, OrbitKind::TypeII}), Error);
  CHECK_THROWS_AS(ctx.orbit("missing"), Error);
  CHECK_THROWS_AS(ctx.small_f("A", 3), Error);
  CHECK_THROWS_AS(ctx.small_f("B", 0), Error);
  CHECK_THROWS_AS(ctx.fixed_e("B"), Error);
  CHECK(ctx.fixed_f("B").dim_k == 6);
  CHECK(ctx.fixed_e("A").dim_k == 1);
  CHECK(ctx.small_e("B", 2).dim_k == 2);
  CHECK_THROWS_AS(ctx.validate(CuspidalAtom::plain("A", 1)), Error);
  auto forged = ctx.fixed_f("B");
  forged.dim_k = 2;
  CHECK_THROWS_AS(ctx.validate(forged), Error);
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("twists") {
  const auto ctx = make_context(3);
  const Multisegment m(on(ctx.small_f("A", 0)), {{0, 1}});
  CHECK(kappa_twist(Rep::langlands(m), 1, ctx) == Rep::langlands(Multisegment(on(ctx.small_f("A", 1)), {{0, 1}})));
  CHECK(kappa_twist(Rep::langlands(m), 3, ctx) == Rep::langlands(m));
  CHECK(kappa_twist(Rep::langlands(m), -1, ctx) == Rep::langlands(Multisegment(on(ctx.small_f("A", 2)), {{0, 1}})));
  const Rep fixed = Rep::langlands(Multisegment(on(ctx.fixed_f("B")), {{0, 1}}));
  CHECK(kappa_twist(fixed, 2, ctx) == fixed);
  const Rep small_e = Rep::zelevinsky(Multisegment(on(ctx.small_e("B", 1)), {{0, 0}}));
  CHECK(galois_twist(small_e, 2, ctx) == Rep::zelevinsky(Multisegment(on(ctx.small_e("B", 0)), {{0, 0}})));
  CHECK_THROWS_AS(kappa_twist(small_e, 1, ctx), Error);
  CHECK_THROWS_AS(galois_twist(Rep::langlands(m), 1, ctx), Error);
}

TEST_CASE("base change and automorphic induction on single lines") {
  const auto ctx2 = make_context(2);
  const Multisegment shape_a(on(ctx2.small_f("A", 0)), {{0, 1}});
  CHECK(bc(Rep::langlands(shape_a), ctx2) == Rep::langlands(Multisegment(on(ctx2.fixed_e("A")), {{0, 1}})));
  const Rep fixed_b = Rep::langlands(Multisegment(on(ctx2.fixed_f("B")), {{0, 1}}));
  CHECK(bc(fixed_b, ctx2) == Rep::langlands(Multisegment(on(ctx2.small_e("B", 0)), {{0, 1}})) *
                                 Rep::langlands(Multisegment(on(ctx2.small_e("B", 1)), {{0, 1}})));

  // Two small members of one orbit collapse onto one line.
  const Rep clash = Rep::langlands(shape_a) * Rep::langlands(Multisegment(on(ctx2.small_f("A", 1)), {{3, 4}}));
  CHECK_THROWS_AS(bc(clash, ctx2), Error);

  CHECK(ai(Rep::langlands(Multisegment(on(ctx2.small_e("B", 0)), {{0, 1}})), ctx2) ==
        Rep::langlands(Multisegment(on(ctx2.fixed_f("B")), {{0, 1}})));
  const auto ctx3 = make_context(3);
  const Rep e_fixed = Rep::langlands(Multisegment(on(ctx3.fixed_e("A")), {{0, 1}}));
  const auto induced = ai(e_fixed, ctx3);
  CHECK(induced.factors().size() == 3);
  for (const auto& f : induced.factors()) CHECK(std::holds_alternative<SmallOrbitMember>(f.line().atom.role));
  CHECK(ai(Rep{}, ctx3).empty());
  CHECK(bc(Rep{}, ctx3).empty());

  CHECK_THROWS_AS(bc(e_fixed, ctx3), Error);
  CHECK_THROWS_AS(ai(Rep::langlands(shape_a), ctx2), Error);
  CHECK_THROWS_AS(bc(Rep::langlands(Multisegment(gen::plain_line("p", 1), {{0, 0}})), ctx2), Error);
}

TEST_CASE("offsets pass through transfers") {
  const auto ctx = make_context(2);
  CuspidalLine line = on(ctx.small_f("A", 1));
  line.offset = Offset::reduce(1, 3);
  const auto image = bc(Rep::langlands(Multisegment(line, {{0, 1}})), ctx);
  CHECK(image.factors().front().line().offset == Offset::reduce(1, 3));
}

TEST_CASE("transfer properties on random reps") {
  gen::Rng rng(51);
  for (int iter = 0; iter < 500; ++iter) {
    const int d = gen::coin(rng) ? 2 : 3;
    const auto ctx = gen::random_context(rng, d);
    for (Field side : {Field::Base, Field::Extension}) {
      const auto r = gen::random_transfer_rep(rng, ctx, side);
      auto transfer = [&](const Rep& x) { return side == Field::Base ? bc(x, ctx) : ai(x, ctx); };
      const auto image = transfer(r);
      CHECK(transfer(zelevinsky_dual(r)) == zelevinsky_dual(image));
      CHECK(image.degree() == (side == Field::Base ? r.degree() * 1 : r.degree() * d));
      if (side == Field::Base) {
        CHECK(sl2_type(image) == sl2_type(r));
        CHECK(depth_sequence(image) == depth_sequence(r));
      } else {
        CHECK(sl2_type(image) == scale_multiplicity(d, sl2_type(r)));
        Composition sum;
        for (int i = 0; i < d; ++i) sum = add_pointwise(sum, depth_sequence(r));
        CHECK(depth_sequence(image) == sum);
      }
    }
  }
}

TEST_CASE("ladder class and Klyachko type are transported") {
  gen::Rng rng(52);
  for (int iter = 0; iter < 500; ++iter) {
    const int d = gen::coin(rng) ? 2 : 3;
    const auto ctx = gen::random_context(rng, d);
    for (Field side : {Field::Base, Field::Extension}) {
      std::vector<RepFactor> factors;
      for (const auto& line : gen::transfer_lines(rng, ctx, side))
        if (gen::coin(rng))
          factors.push_back({Presentation::Langlands, gen::random_ladder(rng, line, gen::uniform(rng, 1, 5), 4, 1)});
      const Rep r(std::move(factors));
      const auto image = side == Field::Base ? bc(r, ctx) : ai(r, ctx);
      for (const auto& f : image.factors()) CHECK(is_ladder(f.m));
      const auto before = klyachko_rep(r);
      const auto after = klyachko_rep(image);
      CHECK(before.tag() == after.tag());
      if (before.is_admits()) CHECK(after.r() == (side == Field::Base ? before.r() : d * before.r()));
    }
  }
}
