#pragma once

#include <array>
#include <vector>

#include "crossdef/crossed.hpp"

namespace crossdef {

/// Component count of the Koszul cochain complex 0 -> A -> A^3 -> A^3 -> A -> 0.
int koszul_rank(int degree);

/// Variable subset indexing the components of each degree: degree 1 is
/// (x, y, z); degree 2 is (xz, yz, xy); degrees 0 and 3 have one
/// component.  Returned as exponent-style 0/1 masks over the variables.
const std::vector<Exponents>& koszul_component_masks(int degree);

/// Cochain with coefficients in A.  components.size() == koszul_rank(degree).
struct Cochain {
  int degree = 0;
  std::vector<CrossedElement> components;

  static Cochain zero(int degree);
  static Cochain single(int degree, int component, CrossedElement value);

  bool is_zero() const;
  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator*(const GaussRational& c) const;
  bool operator==(const Cochain& o) const = default;
};

/// The transposed Koszul differential: degree n -> n+1, n in {0,1,2}.  The
/// symbols f,g,h act on u in A as xu-ux, yu-uy, zu-uz; on a term p*sigma
/// that is (1 - v(sigma)) v p sigma.  Throws std::domain_error outside
/// {0,1,2}.  Requires a 3-variable context.
Cochain koszul_differential(const Cochain& c, const CrossedContext& ctx);

/// G-action on the cochain complex: conjugation twisted per degree by the
/// characters 1; x,y,z; xz,yz,xy; xyz evaluated at sigma^-1.
Cochain g_action(int sigma, const Cochain& c, const CrossedContext& ctx);

/// Reynolds averaging 1/|G| sum_sigma g_action(sigma, .): the projector
/// onto G-invariant cochains.
Cochain invariant_projector(const Cochain& c, const CrossedContext& ctx);

}  // namespace crossdef
