#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "crossdef/bar.hpp"
#include "crossdef/koszul.hpp"

namespace crossdef {

/// Comparison map from the bar resolution of R to the Koszul resolution,
/// degrees 1..3, defined slot-wise on monomials and extended R^e-linearly
/// over the boundary slots.  Index ranges that would require a negative
/// power produce no term.  Throws std::domain_error on a degree mismatch.
KoszulChain psi(int n, const BarTensor& input);

struct ChainMapFailure {
  std::vector<Exponents> monomials;  // the interior slots that failed
};

/// Verifies koszul_chain_differential . psi_n == psi_{n-1} . bar
/// differential on every interior monomial tuple of total degree <= d_max
/// (psi_0 reads a degree-0 bar tensor as an R^e element).  n in {1,2,3}.
std::optional<ChainMapFailure> chain_map_check(int n, int d_max);

/// Multilinear map on A obtained from a degree-n Koszul cochain with
/// values in A: inputs are basis symbols, the bar slots are twisted by the
/// running group element, psi transports them to the Koszul resolution,
/// the cochain is paired component-wise (u (x) v acts as u . f_c . v), and
/// the group symbols are multiplied back on the right.  n in {1,2,3}.
CrossedElement lift_cochain_apply(const Cochain& f,
                                  const std::vector<CrossedKey>& inputs,
                                  const CrossedContext& ctx);

/// Parameters of a degree-2 cochain (p1 + q1 a-bar, p2 + q2 c-bar,
/// p3 + q3 b-bar) in the Klein presets.
struct Mu1Params {
  std::array<Polynomial, 3> p;
  std::array<Polynomial, 3> q;

  static Mu1Params zero(int nvars = 3);
  /// The Koszul 2-cochain the parameters describe (Klein context).
  Cochain cochain(const CrossedContext& ctx) const;
};

/// Closed-form first-order product for the Klein presets: evaluates the
/// explicit formula (character scalar, three bracket terms with integer
/// and mod-2 coefficients and the (-1)^l / (-1)^m signs) on a pair of
/// basis symbols.  Cross-validated against lift_cochain_apply.
CrossedElement mu1_closed_form(const CrossedKey& u, const CrossedKey& v,
                               const Mu1Params& params, const CrossedContext& ctx);

using Bilinear = std::function<CrossedElement(const CrossedKey&, const CrossedKey&)>;

/// Bilinear extension of a basis-pair rule.
CrossedElement apply_bilinear(const Bilinear& mu, const CrossedElement& u,
                              const CrossedElement& v);

struct CocycleFailure {
  CrossedKey u, v, w;
};

/// Checks the Hochschild 2-cocycle identity
///   mu(u,v) w + mu(uv, w) == mu(u, vw) + u mu(v, w)
/// over all basis triples (monomial degrees summing to <= d_max, all
/// group elements).
std::optional<CocycleFailure> cocycle_check(const Bilinear& mu, int d_max,
                                            const CrossedContext& ctx);

}  // namespace crossdef
