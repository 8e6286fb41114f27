#include <doctest.h>

#include "bilocal/errors.hpp"
#include "bilocal/fock.hpp"
#include "bilocal/suite.hpp"

using namespace bilocal;

TEST_CASE("context validation") {
  CHECK_THROWS_AS((FockContext{FieldKind::Complex, -1, 2, 4}.validate()), ContextError);
  CHECK_THROWS((FockContext{FieldKind::Complex, 1, 0, 4}.validate()));
  CHECK_NOTHROW((FockContext{FieldKind::Real, 0, 1, 0}.validate()));
}

TEST_CASE("slot codes round-trip") {
  const FockContext ctx{FieldKind::Complex, 2, 3, 4};
  for (int code = 0; code < ctx.slot_count(); ++code) {
    const ModeSlot s = ctx.decode(static_cast<SlotCode>(code));
    CHECK(ctx.encode(s) == code);
  }
  CHECK_THROWS(ctx.require(ModeSlot{4, 1, Species::A}));
  CHECK_THROWS((FockContext{FieldKind::Real, 2, 2, 4}.require(ModeSlot{1, 1, Species::B})));
}

TEST_CASE("creation and annihilation on repeated slots") {
  const FockContext ctx{FieldKind::Real, 1, 1, 4};
  const ModeSlot s{1, 1, Species::A};
  FockVector v = vacuum(ctx);
  v = apply_creation(ctx, s, v);
  v = apply_creation(ctx, s, v);
  // (a*)^2|0> has norm 2.
  CHECK(inner_product(v, v) == 2);
  // a (a*)^2 |0> = 2 a*|0>.
  const FockVector down = apply_annihilation(ctx, s, v);
  CHECK(down == 2 * apply_creation(ctx, s, vacuum(ctx)));
  CHECK(apply_annihilation(ctx, s, vacuum(ctx)).is_zero());
}

TEST_CASE("truncation drops states above P") {
  const FockContext ctx{FieldKind::Real, 1, 1, 1};
  const ModeSlot s{1, 1, Species::A};
  const FockVector one = apply_creation(ctx, s, vacuum(ctx));
  CHECK(apply_creation(ctx, s, one).is_zero());
}

TEST_CASE("monomial basis size") {
  // 2 slots, up to 2 particles: 1 + 2 + 3.
  const FockContext ctx{FieldKind::Complex, 1, 1, 2};
  CHECK(monomial_basis(ctx, 2).size() == 6);
}

TEST_CASE("span reduction") {
  const FockContext ctx{FieldKind::Complex, 1, 2, 2};
  FockSpan span(ctx);
  const FockVector a = apply_creation(ctx, {1, 1, Species::A}, vacuum(ctx));
  const FockVector b = apply_creation(ctx, {2, 1, Species::A}, vacuum(ctx));
  CHECK(span.add(a + b));
  CHECK(span.add(a - b));
  CHECK_FALSE(span.add(3 * a));
  CHECK(span.dimension() == 2);
  CHECK(span.reduce(a).is_zero());
}

TEST_CASE("canonical commutation relations and adjointness") {
  for (auto kind : {FieldKind::Complex, FieldKind::Real}) {
    const FockContext ctx{kind, 2, 2, 3};
    CHECK(verify_ccr(ctx, 1).passed);
    CHECK(verify_creation_adjointness(ctx, 1).passed);
    CHECK(verify_gram_positivity(ctx, 30).passed);
  }
}

TEST_CASE("mixing contexts is rejected") {
  const FockVector a = vacuum(FockContext{FieldKind::Complex, 1, 1, 2});
  const FockVector b = vacuum(FockContext{FieldKind::Complex, 2, 1, 2});
  CHECK_THROWS_AS(inner_product(a, b), ContextError);
}
