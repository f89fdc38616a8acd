#pragma once

#include <random>
#include <string>

#include "doctest.h"

#include "crossdef/crossed.hpp"
#include "crossdef/format.hpp"

namespace crossdef::testing {

inline const CrossedContext& klein_dt() {
  static CrossedContext ctx(make_klein_preset(true));
  return ctx;
}

inline const CrossedContext& klein_trivial() {
  static CrossedContext ctx(make_klein_preset(false));
  return ctx;
}

inline CrossedElement elem(const std::string& text, const CrossedContext& ctx) {
  return parse_crossed(text, ctx.data());
}

inline Polynomial poly(const std::string& text, const CrossedContext& ctx) {
  return parse_polynomial(text, ctx.data());
}

inline CrossedKey key(const std::string& text, const CrossedContext& ctx) {
  CrossedElement e = elem(text, ctx);
  REQUIRE(e.nterms() == 1);
  REQUIRE(e.terms().begin()->second.is_one());
  return e.terms().begin()->first;
}

inline GaussRational random_gauss(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace crossdef::testing
