#include "crossdef/koszul.hpp"

#include <stdexcept>

namespace crossdef {

int koszul_rank(int degree) {
  switch (degree) {
    case 0: case 3: return 1;
    case 1: case 2: return 3;
    default: throw std::domain_error("Koszul degree out of range 0..3");
  }
}

const std::vector<Exponents>& koszul_component_masks(int degree) {
  static const std::vector<Exponents> deg0 = {{0, 0, 0}};
  static const std::vector<Exponents> deg1 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  static const std::vector<Exponents> deg2 = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
  static const std::vector<Exponents> deg3 = {{1, 1, 1}};
  switch (degree) {
    case 0: return deg0;
    case 1: return deg1;
    case 2: return deg2;
    case 3: return deg3;
    default: throw std::domain_error("Koszul degree out of range 0..3");
  }
}

Cochain Cochain::zero(int degree) {
  return {degree, std::vector<CrossedElement>(koszul_rank(degree))};
}

Cochain Cochain::single(int degree, int component, CrossedElement value) {
  Cochain c = zero(degree);
  c.components.at(component) = std::move(value);
  return c;
}

bool Cochain::is_zero() const {
  for (const auto& e : components)
    if (!e.is_zero()) return false;
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (degree != o.degree) throw std::invalid_argument("cochain degree mismatch");
  Cochain r = *this;
  for (size_t i = 0; i < components.size(); ++i) r.components[i] += o.components[i];
  return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (degree != o.degree) throw std::invalid_argument("cochain degree mismatch");
  Cochain r = *this;
  for (size_t i = 0; i < components.size(); ++i) r.components[i] -= o.components[i];
  return r;
}

Cochain Cochain::operator*(const GaussRational& c) const {
  Cochain r = *this;
  for (auto& e : r.components) e = e * c;
  return r;
}

namespace {

// f, g, h for var = 0, 1, 2: u -> (1 - var(sigma)) * var * u, term-wise.
CrossedElement fgh(int var, const CrossedElement& u, const CrossedContext& ctx) {
  CrossedElement r;
  for (const auto& [k, c] : u.terms()) {
    GaussRational lam =
        GaussRational::one() - ctx.data().action.char_value(var, k.sigma);
    if (lam.is_zero()) continue;
    Exponents m = k.mono;
    ++m[var];
    r.add_term({m, k.sigma}, c * lam);
  }
  return r;
}

}  // namespace

Cochain koszul_differential(const Cochain& c, const CrossedContext& ctx) {
  if (ctx.nvars() != 3)
    throw std::domain_error("Koszul complex requires exactly three variables");
  const auto& comp = c.components;
  switch (c.degree) {
    case 0: {
      // delta_1^* = column (f, g, h)
      Cochain r = Cochain::zero(1);
      for (int v = 0; v < 3; ++v) r.components[v] = fgh(v, comp[0], ctx);
      return r;
    }
    case 1: {
      // delta_2^* = [ -h 0 f ; 0 -h g ; -g f 0 ] acting on (u, v, w)
      Cochain r = Cochain::zero(2);
      r.components[0] = fgh(0, comp[2], ctx) - fgh(2, comp[0], ctx);
      r.components[1] = fgh(1, comp[2], ctx) - fgh(2, comp[1], ctx);
      r.components[2] = fgh(0, comp[1], ctx) - fgh(1, comp[0], ctx);
      return r;
    }
    case 2: {
      // delta_3^* = ( -g, f, h )
      Cochain r = Cochain::zero(3);
      r.components[0] =
          fgh(0, comp[1], ctx) + fgh(2, comp[2], ctx) - fgh(1, comp[0], ctx);
      return r;
    }
    default:
      throw std::domain_error("koszul_differential: degree out of range 0..2");
  }
}

Cochain g_action(int sigma, const Cochain& c, const CrossedContext& ctx) {
  const auto& masks = koszul_component_masks(c.degree);
  int sigma_inv = ctx.group().inverse(sigma);
  Cochain r = Cochain::zero(c.degree);
  for (size_t i = 0; i < c.components.size(); ++i) {
    GaussRational chi =
        GaussRational::root_of_unity_pow(ctx.monomial_char_pow(masks[i], sigma_inv));
    r.components[i] = ctx.inner_action(sigma, c.components[i]) * chi;
  }
  return r;
}

Cochain invariant_projector(const Cochain& c, const CrossedContext& ctx) {
  Cochain sum = Cochain::zero(c.degree);
  for (int sigma = 0; sigma < ctx.group_size(); ++sigma) sum = sum + g_action(sigma, c, ctx);
  return sum * GaussRational(Rational(1, ctx.group_size()));
}

}  // namespace crossdef
