#include "doctest.h"
#include "helpers.hpp"

#include "crossdef/group.hpp"

using namespace crossdef;
using testing::klein_dt;
using testing::klein_trivial;

TEST_CASE("abelian group arithmetic") {
  AbelianGroup g({2, 3});
  CHECK(g.size() == 6);
  for (int a = 0; a < g.size(); ++a) {
    CHECK(g.add(a, AbelianGroup::identity()) == a);
    CHECK(g.add(a, g.inverse(a)) == AbelianGroup::identity());
    for (int b = 0; b < g.size(); ++b) CHECK(g.add(a, b) == g.add(b, a));
  }
  CHECK(g.rank_of(g.tuple_of(5)) == 5);
}

TEST_CASE("klein presets validate") {
  for (const auto* ctx : {&klein_dt(), &klein_trivial()}) {
    CHECK(ctx->data().cocycle.validate(ctx->group()) == std::nullopt);
  }
}

TEST_CASE("discrete torsion cocycle values") {
  const auto& d = klein_dt().data();
  int a = d.element_by_name("a"), b = d.element_by_name("b"), c = d.element_by_name("c");
  GaussRational i = GaussRational::imag_unit();
  CHECK(d.cocycle.value(a, b) == i);
  CHECK(d.cocycle.value(b, a) == -i);
  CHECK(d.cocycle.value(b, c) == i);
  CHECK(d.cocycle.value(c, b) == -i);
  CHECK(d.cocycle.value(c, a) == i);
  CHECK(d.cocycle.value(a, c) == -i);
  for (int s = 0; s < 4; ++s) {
    CHECK(d.cocycle.value(s, s) == GaussRational::one());
    CHECK(d.cocycle.value(0, s) == GaussRational::one());
    CHECK(d.cocycle.value(s, 0) == GaussRational::one());
  }
}

TEST_CASE("antisymmetry off the diagonal") {
  const auto& d = klein_dt().data();
  for (int s = 1; s < 4; ++s)
    for (int t = 1; t < 4; ++t) {
      if (s == t) continue;
      CHECK(d.cocycle.value(s, t) == -d.cocycle.value(t, s));
    }
}

TEST_CASE("a flipped entry breaks the cocycle identity with a witness") {
  const auto& d = klein_dt().data();
  int a = d.element_by_name("a"), b = d.element_by_name("b");
  std::vector<std::vector<int>> pows(4, std::vector<int>(4, 0));
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) pows[s][t] = d.cocycle.pow(s, t);
  pows[a][b] = (pows[a][b] + 2) % 4;  // alpha(a,b): i -> -i, alpha(b,a) untouched
  Cocycle broken(d.group, pows);
  auto violation = broken.validate(d.group);
  REQUIRE(violation.has_value());
  // The witness triple actually violates the identity.
  int lhs = broken.pow(violation->sigma, violation->tau) +
            broken.pow(violation->rho, d.group.add(violation->sigma, violation->tau));
  int rhs = broken.pow(violation->rho, violation->sigma) +
            broken.pow(d.group.add(violation->rho, violation->sigma), violation->tau);
  CHECK((lhs - rhs) % 4 != 0);
}

TEST_CASE("characters are multiplicative") {
  const auto& ctx = klein_dt();
  for (int v = 0; v < 3; ++v)
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t)
        CHECK((ctx.data().action.char_pow(v, s) + ctx.data().action.char_pow(v, t)) % 4 ==
              ctx.data().action.char_pow(v, ctx.group().add(s, t)));
}

TEST_CASE("monomial scalars") {
  const auto& ctx = klein_dt();
  int a = ctx.data().element_by_name("a");
  CHECK(ctx.monomial_scalar({1, 0, 0}, a) == GaussRational(-1));  // a.x = -x
  CHECK(ctx.monomial_scalar({2, 1, 3}, AbelianGroup::identity()) == GaussRational::one());
  CHECK(ctx.monomial_scalar({1, 1, 1}, a) == GaussRational::one());  // (-1)(+1)(-1)
}

TEST_CASE("sigma-bar inverse scalars") {
  const auto& ctx = klein_dt();
  int a = ctx.data().element_by_name("a");
  CHECK(ctx.sigma_bar_inverse_scalar(AbelianGroup::identity()) == GaussRational::one());
  CHECK(ctx.sigma_bar_inverse_scalar(a) == GaussRational::one());  // alpha(a,a) = 1
  CHECK(klein_trivial().sigma_bar_inverse_scalar(a) == GaussRational::one());
}

TEST_CASE("character table rejects non-characters") {
  AbelianGroup g({2, 2});
  // 1 at identity but not multiplicative.
  CHECK_THROWS_AS(DiagonalAction(g, {{0, 1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalAction(g, {{1, 0, 0, 0}}), std::invalid_argument);
}
