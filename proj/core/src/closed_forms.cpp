#include "crossdef/closed_forms.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace crossdef {

namespace {

using Pred = std::function<bool(const Exponents&)>;

int count_monomials(int d, const Pred& pred) {
  if (d < 0) return 0;
  int n = 0;
  for (const auto& e : monomials_of_degree(3, d))
    if (pred(e)) ++n;
  return n;
}

Pred any() {
  return [](const Exponents&) { return true; };
}

// Monomials whose exponent parities match one of two patterns (the
// two-summand spaces like xC[x^2,y^2,z^2] + yzC[x^2,y^2,z^2]).
Pred parity(std::array<int, 3> p1, std::array<int, 3> p2) {
  return [p1, p2](const Exponents& e) {
    auto match = [&](const std::array<int, 3>& p) {
      return e[0] % 2 == p[0] && e[1] % 2 == p[1] && e[2] % 2 == p[2];
    };
    return match(p1) || match(p2);
  };
}

// Single-variable families C[v] / C[v^2] / vC[v^2].
Pred pure(int var, int parity_mod2 /* -1: any */) {
  return [var, parity_mod2](const Exponents& e) {
    for (int i = 0; i < 3; ++i)
      if (i != var && e[i] != 0) return false;
    return parity_mod2 < 0 || e[var] % 2 == parity_mod2;
  };
}

constexpr int kX = 0, kY = 1, kZ = 2;
constexpr int kA = 1, kB = 2, kC = 3;

}  // namespace

int klein_hh_rA_dim(int n, int sigma, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  switch (n) {
    case 0:
      return sigma == 0 ? count_monomials(d, any()) : 0;
    case 1:
      return sigma == 0 ? 3 * count_monomials(d, any()) : 0;
    case 2:
      if (sigma == 0) return 3 * count_monomials(d, any());
      if (sigma == kA) return count_monomials(d, pure(kY, -1));  // C[y] a-bar
      if (sigma == kC) return count_monomials(d, pure(kX, -1));  // C[x] c-bar
      if (sigma == kB) return count_monomials(d, pure(kZ, -1));  // C[z] b-bar
      return 0;
    case 3:
      if (sigma == 0) return count_monomials(d, any());
      if (sigma == kA) return count_monomials(d, pure(kY, -1));
      if (sigma == kB) return count_monomials(d, pure(kZ, -1));
      if (sigma == kC) return count_monomials(d, pure(kX, -1));
      return 0;
    default:
      return 0;  // HH^n(R, A) = 0 for n > 3
  }
}

int klein_hh_A_dim(bool discrete_torsion, int n, int sigma, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const Pred same_parity = parity({0, 0, 0}, {1, 1, 1});
  // q / p twisted-sector parities: dt takes the even family, trivial the odd.
  const int q_par = discrete_torsion ? 0 : 1;
  const int p3_par = discrete_torsion ? 1 : 0;
  switch (n) {
    case 0:
      return sigma == 0 ? count_monomials(d, same_parity) : 0;
    case 1:
      if (sigma != 0) return 0;
      return count_monomials(d, parity({1, 0, 0}, {0, 1, 1})) +  // x-component
             count_monomials(d, parity({0, 1, 0}, {1, 0, 1})) +  // y-component
             count_monomials(d, parity({0, 0, 1}, {1, 1, 0}));   // z-component
    case 2:
      if (sigma == 0)
        return count_monomials(d, parity({0, 1, 0}, {1, 0, 1})) +  // p1: yC + xzC
               count_monomials(d, parity({1, 0, 0}, {0, 1, 1})) +  // p2: xC + yzC
               count_monomials(d, parity({0, 0, 1}, {1, 1, 0}));   // p3: zC + xyC
      if (sigma == kA) return count_monomials(d, pure(kY, q_par));
      if (sigma == kC) return count_monomials(d, pure(kX, q_par));
      if (sigma == kB) return count_monomials(d, pure(kZ, q_par));
      return 0;
    case 3:
      if (sigma == 0) return count_monomials(d, same_parity);
      if (sigma == kA) return count_monomials(d, pure(kY, p3_par));
      if (sigma == kB) return count_monomials(d, pure(kZ, p3_par));
      if (sigma == kC) return count_monomials(d, pure(kX, p3_par));
      return 0;
    default:
      return 0;
  }
}

}  // namespace crossdef
