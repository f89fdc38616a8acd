#include "doctest.h"
#include "helpers.hpp"

#include "crossdef/tpoly.hpp"

using namespace crossdef;
using testing::elem;
using testing::klein_dt;
using testing::klein_trivial;

TEST_CASE("basis multiplication rule") {
  const auto& ctx = klein_dt();
  // (x a)(y b) = i xy c since a.y = y, alpha(a,b) = i, ab = c
  CHECK(ctx.mul(elem("x*[a]", ctx), elem("y*[b]", ctx)) == elem("i*x*y*[c]", ctx));
  // b a = -i c
  CHECK(ctx.mul(elem("[b]", ctx), elem("[a]", ctx)) == elem("-i*[c]", ctx));
  // identity element
  CrossedElement u = elem("x^2*y*[b] + (2+1i)*z*[c] - 3", ctx);
  CHECK(ctx.mul(elem("1", ctx), u) == u);
  CHECK(ctx.mul(u, elem("1", ctx)) == u);
}

TEST_CASE("associativity on low-degree basis triples, both presets") {
  for (const auto* ctx : {&klein_dt(), &klein_trivial()}) {
    auto monos = monomials_up_to_degree(3, 4);
    for (const auto& m1 : monos)
      for (const auto& m2 : monos)
        for (const auto& m3 : monos) {
          if (total_degree(m1) + total_degree(m2) + total_degree(m3) > 4) continue;
          for (int s1 = 0; s1 < 4; ++s1)
            for (int s2 = 0; s2 < 4; ++s2)
              for (int s3 = 0; s3 < 4; ++s3) {
                CrossedElement u = CrossedElement::basis(m1, s1);
                CrossedElement v = CrossedElement::basis(m2, s2);
                CrossedElement w = CrossedElement::basis(m3, s3);
                CHECK(ctx->mul(ctx->mul(u, v), w) == ctx->mul(u, ctx->mul(v, w)));
              }
        }
  }
}

TEST_CASE("polynomial subalgebra embeds multiplicatively") {
  const auto& ctx = klein_dt();
  Polynomial p = testing::poly("x^2 + 3*y*z - 1/2", ctx);
  Polynomial q = testing::poly("x*y - 2*z^3", ctx);
  CHECK(ctx.mul(CrossedElement::from_polynomial(p), CrossedElement::from_polynomial(q)) ==
        CrossedElement::from_polynomial(p * q));
}

TEST_CASE("inner action") {
  const auto& ctx = klein_dt();
  int a = ctx.data().element_by_name("a");
  CHECK(ctx.inner_action(a, elem("x", ctx)) == elem("-x", ctx));
  CrossedElement u = elem("x*y^2*[b] + i*z*[c]", ctx);
  CHECK(ctx.inner_action(AbelianGroup::identity(), u) == u);
  // a . (y b) = -y b under the twisted cocycle
  CHECK(ctx.inner_action(a, elem("y*[b]", ctx)) == elem("-y*[b]", ctx));
  // and +y b when the cocycle is trivial
  const auto& triv = klein_trivial();
  CHECK(triv.inner_action(a, elem("y*[b]", triv)) == elem("y*[b]", triv));
}

TEST_CASE("inner action agrees with explicit conjugation") {
  for (const auto* ctx : {&klein_dt(), &klein_trivial()}) {
    for (int sigma = 0; sigma < 4; ++sigma) {
      CrossedElement sbar = CrossedElement::basis({0, 0, 0}, sigma);
      CrossedElement sbar_inv =
          CrossedElement::basis({0, 0, 0}, ctx->group().inverse(sigma)) *
          ctx->sigma_bar_inverse_scalar(sigma);
      CHECK(ctx->mul(sbar, sbar_inv) == elem("1", *ctx));
      for (const auto& m : monomials_up_to_degree(3, 3))
        for (int tau = 0; tau < 4; ++tau) {
          CrossedElement u = CrossedElement::basis(m, tau);
          CHECK(ctx->inner_action(sigma, u) == ctx->mul(sbar, ctx->mul(u, sbar_inv)));
        }
    }
  }
}

TEST_CASE("center membership at low degree") {
  for (const auto* ctx : {&klein_dt(), &klein_trivial()}) {
    CHECK(ctx->center_test(elem("x^2", *ctx), 6) == std::nullopt);
    CHECK(ctx->center_test(elem("y^2", *ctx), 4) == std::nullopt);
    CHECK(ctx->center_test(elem("z^2", *ctx), 4) == std::nullopt);
    CHECK(ctx->center_test(elem("x*y*z", *ctx), 4) == std::nullopt);
    CHECK(ctx->center_test(elem("1", *ctx), 3) == std::nullopt);
    for (const char* v : {"x", "y", "z"}) {
      auto witness = ctx->center_test(elem(v, *ctx), 2);
      REQUIRE(witness.has_value());
      CrossedElement u = elem(v, *ctx);
      CrossedElement s = CrossedElement::basis(witness->basis.mono, witness->basis.sigma);
      CHECK(!(ctx->mul(u, s) == ctx->mul(s, u)));
    }
  }
}

TEST_CASE("x fails centrality against the a-generator") {
  const auto& ctx = klein_dt();
  auto witness = ctx.center_test(elem("x", ctx), 2);
  REQUIRE(witness.has_value());
  // First witness in sweep order is the pure group symbol that negates x.
  CHECK(total_degree(witness->basis.mono) == 0);
}

TEST_CASE("t-polynomial products") {
  const auto& ctx = klein_dt();
  auto star = [&ctx](const CrossedElement& a, const CrossedElement& b) {
    return TElement(ctx.mul(a, b));
  };
  // Reduces to crossed multiplication in t-degree 0.
  CrossedElement u = elem("x*[a]", ctx), v = elem("y*[b]", ctx);
  CHECK(t_mul(TElement(u), TElement(v), star) == TElement(ctx.mul(u, v)));
  // t * t = t^2.
  TElement t1 = TElement::t_times(1, elem("1", ctx));
  CHECK(t_mul(t1, t1, star) == TElement::t_times(2, elem("1", ctx)));
  // Cauchy cross terms.
  TElement a = TElement(elem("x", ctx)) + TElement::t_times(1, elem("y", ctx));
  TElement b = TElement(elem("z", ctx)) + TElement::t_times(2, elem("1", ctx));
  TElement prod = t_mul(a, b, star);
  CHECK(prod.coeff(0) == elem("x*z", ctx));
  CHECK(prod.coeff(1) == elem("y*z", ctx));
  CHECK(prod.coeff(2) == elem("x", ctx));
  CHECK(prod.coeff(3) == elem("y", ctx));
}
