#include "doctest.h"
#include "helpers.hpp"

#include "crossdef/deform.hpp"

using namespace crossdef;
using testing::elem;
using testing::klein_dt;
using testing::klein_trivial;
using testing::poly;

namespace {

StarContext dt_context(const std::string& q1 = "1", const std::string& q2 = "1",
                       const std::string& q3 = "1") {
  const auto& ctx = klein_dt();
  return make_star_context(ctx, poly(q1, ctx), poly(q2, ctx), poly(q3, ctx));
}

}  // namespace

TEST_CASE("star product examples") {
  const auto& ctx = klein_dt();
  StarContext sc = dt_context("1", "0", "0");
  // x * z = xz + t a-bar.
  TElement xz = star_mul(sc, elem("x", ctx), elem("z", ctx));
  CHECK(xz.coeff(0) == elem("x*z", ctx));
  CHECK(xz.coeff(1) == elem("[a]", ctx));
  CHECK(xz.t_degree() == 1);
  // z * x has no t-term.
  TElement zx = star_mul(sc, elem("z", ctx), elem("x", ctx));
  CHECK(zx == TElement(elem("x*z", ctx)));
  // Unit laws.
  CrossedElement u = elem("x^2*y*[b] + i*z*[c]", ctx);
  CHECK(star_mul(sc, u, elem("1", ctx)) == TElement(u));
  CHECK(star_mul(sc, elem("1", ctx), u) == TElement(u));
}

TEST_CASE("t-degree-zero part is the crossed product") {
  StarContext sc = dt_context("y^2", "x^2", "z^2");
  const auto& ctx = klein_dt();
  auto monos = monomials_up_to_degree(3, 3);
  for (const auto& mu : monos)
    for (const auto& mv : monos)
      for (int su = 0; su < 4; ++su)
        for (int sv = 0; sv < 4; ++sv) {
          CrossedElement u = CrossedElement::basis(mu, su);
          CrossedElement v = CrossedElement::basis(mv, sv);
          CHECK(star_mul(sc, u, v).coeff(0) == ctx.mul(u, v));
        }
}

TEST_CASE("associativity of the deformed product") {
  CHECK(associativity_check(dt_context(), 3) == std::nullopt);
  // Trivial cocycle with the single-factor formula and odd q1.
  const auto& triv = klein_trivial();
  StarContext sc = make_star_context(triv, poly("y", triv), poly("0", triv), poly("0", triv),
                                     DeformationFormula::kFirstFactorOnly);
  CHECK(associativity_check(sc, 3) == std::nullopt);
  // All q = 0 degenerates to the crossed product.
  CHECK(associativity_check(dt_context("0", "0", "0"), 3) == std::nullopt);
}

TEST_CASE("first-order agreement with the closed form") {
  CHECK(first_order_check(dt_context(), 3) == std::nullopt);
  CHECK(first_order_check(dt_context("y^2", "0", "0"), 3) == std::nullopt);
  const auto& triv = klein_trivial();
  StarContext f1 = make_star_context(triv, poly("y", triv), poly("0", triv), poly("0", triv),
                                     DeformationFormula::kFirstFactorOnly);
  CHECK(first_order_check(f1, 3) == std::nullopt);
}

TEST_CASE("operator identity for the triple product") {
  // F1 F2 F3 acts as 1(x)1 + t sum D_i (x) D_i' + t^2 D2D3 (x) D2'D3'.
  StarContext sc = dt_context("y^2", "1", "z^2");
  const auto& ctx = klein_dt();
  HopfTensor reduced = HopfTensor::unit(6);
  for (int i = 0; i < 3; ++i) {
    HopfTensor d = HopfTensor::generator(3, i, h1::kD);
    HopfTensor dp = HopfTensor::generator(3, i, h1::kDp);
    reduced = reduced + d.tensor(dp).shifted_t(1);
  }
  {
    HopfTensor d23 = HopfTensor::generator(3, 1, h1::kD) * HopfTensor::generator(3, 2, h1::kD);
    HopfTensor dp23 =
        HopfTensor::generator(3, 1, h1::kDp) * HopfTensor::generator(3, 2, h1::kDp);
    reduced = reduced + d23.tensor(dp23).shifted_t(2);
  }
  auto monos = monomials_up_to_degree(3, 4);
  for (const auto& mu : monos)
    for (const auto& mv : monos) {
      if (total_degree(mu) + total_degree(mv) > 4) continue;
      for (int su = 0; su < 4; ++su)
        for (int sv = 0; sv < 4; ++sv) {
          CrossedElement u = CrossedElement::basis(mu, su);
          CrossedElement v = CrossedElement::basis(mv, sv);
          CHECK(apply_pair(sc.F, sc.family, ctx, u, v) ==
                apply_pair(reduced, sc.family, ctx, u, v));
        }
    }
}

TEST_CASE("the adjusted element w is central; xyz alone is not") {
  StarContext sc = dt_context();
  const auto& ctx = klein_dt();
  TElement w = central_w(sc);
  CHECK(w.coeff(0) == elem("x*y*z", ctx));
  CHECK(w.coeff(1) == elem("1/2*y*[a] + 1/2*x*[c] + 1/2*z*[b]", ctx));
  CenterProbeResult probe = center_membership_probe(w, sc, 4, 3);
  CHECK(probe.central);
  REQUIRE(probe.rewrite.ok);
  HatPoly expect;
  expect[{0, 0, 0, 1, 0}] = GaussRational::one();
  CHECK(probe.rewrite.poly == expect);

  CenterProbeResult xyz = center_membership_probe(TElement(elem("x*y*z", ctx)), sc, 3, 3);
  CHECK(!xyz.central);
  CHECK(!xyz.witness.empty());
}

TEST_CASE("squares of the coordinate generators stay central") {
  StarContext sc = dt_context("y^2", "x^2", "z^2");
  const auto& ctx = klein_dt();
  for (const char* g : {"x^2", "y^2", "z^2"}) {
    CenterProbeResult probe = center_membership_probe(TElement(elem(g, ctx)), sc, 4, 2);
    CHECK(probe.central);
    CHECK(probe.rewrite.ok);
  }
  // x^2 + t y^2 rewrites as X + tY.
  TElement v = TElement(elem("x^2", ctx)) + TElement::t_times(1, elem("y^2", ctx));
  CenterProbeResult probe = center_membership_probe(v, sc, 3, 2);
  CHECK(probe.central);
  REQUIRE(probe.rewrite.ok);
  HatPoly expect;
  expect[{1, 0, 0, 0, 0}] = GaussRational::one();
  expect[{0, 1, 0, 0, 1}] = GaussRational::one();
  CHECK(probe.rewrite.poly == expect);
  // x is not central and not a hat polynomial.
  CenterProbeResult bad = center_membership_probe(TElement(elem("x", ctx)), sc, 2, 2);
  CHECK(!bad.central);
  CHECK(!bad.rewrite.ok);
}

TEST_CASE("w*w against the reference formula") {
  const auto& ctx = klein_dt();
  // q = (1,1,1): w*w = x^2y^2z^2 + (1/4) t^2 (y^2 + x^2 + z^2) - (1/4) i t^3.
  TElement wsq = w_square(dt_context());
  CHECK(wsq.coeff(0) == elem("x^2*y^2*z^2", ctx));
  CHECK(wsq.coeff(1).is_zero());
  CHECK(wsq.coeff(2) == elem("1/4*x^2 + 1/4*y^2 + 1/4*z^2", ctx));
  CHECK(wsq.coeff(3) == elem("-1/4*i", ctx));
  CHECK(wsq.t_degree() == 3);
  // q = 0 degenerates to the plain square.
  CHECK(w_square(dt_context("0", "0", "0")) == TElement(elem("x^2*y^2*z^2", ctx)));
}

TEST_CASE("w*w scaling behavior") {
  const auto& ctx = klein_dt();
  // Doubling q1 quadruples the y^2 q1^2 term and doubles the t^3 term.
  TElement base = w_square(dt_context("1", "1", "1"));
  TElement scaled = w_square(dt_context("2", "1", "1"));
  CHECK(scaled.coeff(2).component(0).terms().at({0, 2, 0}) ==
        base.coeff(2).component(0).terms().at({0, 2, 0}) * GaussRational(4));
  CHECK(scaled.coeff(3) == base.coeff(3) * GaussRational(2));
  // Monomial q with higher exponents: t^2 keeps the same coefficient.
  TElement shifted = w_square(dt_context("y^2", "1", "1"));
  CHECK(shifted.coeff(2).component(0).terms().at({0, 6, 0}) ==
        GaussRational(Rational(1, 4)));
}

TEST_CASE("t-degree is exactly three when all q are nonzero") {
  for (const char* q1 : {"1", "y^2"}) {
    TElement wsq = w_square(dt_context(q1, "x^2", "z^2"));
    CHECK(wsq.t_degree() == 3);
    CHECK(wsq.coeff(1).is_zero());
  }
}

TEST_CASE("center relation report") {
  const auto& ctx = klein_dt();
  const GaussRational one(1);
  CenterRelationReport rep = center_relation(ctx, 0, 0, 0, {one, one, one});
  REQUIRE(rep.rewrite_ok);
  // W^2 = XYZ + 1/4 t^2 (X + Y + Z) - 1/4 i t^3 at unit scaling.
  HatPoly expect;
  expect[{1, 1, 1, 0, 0}] = GaussRational::one();
  GaussRational quarter{Rational(1, 4)};
  expect[{1, 0, 0, 0, 2}] = quarter;
  expect[{0, 1, 0, 0, 2}] = quarter;
  expect[{0, 0, 1, 0, 2}] = quarter;
  expect[{0, 0, 0, 0, 3}] = -quarter * GaussRational::imag_unit();
  CHECK(rep.realized == expect);
  CHECK(!rep.matches_reference);
  // Scaling 2 reproduces the reference coefficients (1, -2i); 1/2 does not.
  CHECK(rep.reference_scaling == GaussRational(2));
  REQUIRE(rep.candidate_scalings.size() == 2);
  CHECK(rep.candidate_scalings[0].second);
  CHECK(!rep.candidate_scalings[1].second);

  // Zero scaling: W^2 = XYZ.
  CenterRelationReport zero =
      center_relation(ctx, 0, 0, 0, {GaussRational::zero(), GaussRational::zero(),
                                     GaussRational::zero()});
  REQUIRE(zero.rewrite_ok);
  HatPoly xyz;
  xyz[{1, 1, 1, 0, 0}] = GaussRational::one();
  CHECK(zero.realized == xyz);
}

TEST_CASE("center relation with a higher exponent") {
  const auto& ctx = klein_dt();
  CenterRelationReport rep =
      center_relation(ctx, 1, 0, 0, {GaussRational(2), GaussRational(2), GaussRational(2)});
  REQUIRE(rep.rewrite_ok);
  CHECK(rep.matches_reference);
  // t^2 carries X^3 with unit coefficient.
  CHECK(rep.realized.at({3, 0, 0, 0, 2}) == GaussRational::one());
  CHECK(rep.reference_scaling == GaussRational(2));
}

TEST_CASE("central_w requires the twisted preset") {
  const auto& triv = klein_trivial();
  StarContext sc = make_star_context(triv, poly("y", triv), poly("0", triv), poly("0", triv),
                                     DeformationFormula::kFirstFactorOnly);
  CHECK_THROWS_AS(central_w(sc), std::domain_error);
}
