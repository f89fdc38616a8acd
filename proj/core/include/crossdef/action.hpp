#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crossdef/crossed.hpp"
#include "crossdef/hopf.hpp"
#include "crossdef/tpoly.hpp"

namespace crossdef {

/// Linear operator on A given by its values on basis symbols.
class OperatorOnA {
 public:
  using Rule = std::function<CrossedElement(const Exponents&, int sigma)>;

  OperatorOnA() = default;
  explicit OperatorOnA(Rule rule) : rule_(std::move(rule)) {}
  static OperatorOnA identity();

  CrossedElement on_basis(const Exponents& mono, int sigma) const { return rule_(mono, sigma); }
  CrossedElement apply(const CrossedElement& u) const;
  /// this after other.
  OperatorOnA compose(const OperatorOnA& other) const;

 private:
  Rule rule_;
};

/// The three skew-derivation pairs and automorphisms acting on A; index i
/// in {0,1,2} plays the paper role i+1.
struct OperatorFamily {
  std::array<OperatorOnA, 3> D;
  std::array<OperatorOnA, 3> Dp;
  std::array<OperatorOnA, 3> beta;
  std::array<Polynomial, 3> q;  // the parameters baked into D / Dp

  /// Operator of an H1 basis word at family index i: D^a Dp^b beta^c
  /// composed left to right.
  OperatorOnA word_operator(int i, std::uint8_t word) const;
  /// Operator of an H = H1 (x) H1 (x) H1 basis tuple (slot i acts through
  /// family index i; cross-slot order is index 0 first).
  OperatorOnA tuple_operator(const std::vector<std::uint8_t>& words) const;
};

/// Whether the polynomial lies in C[v^2] (parity 0) or v C[v^2]
/// (parity 1) for the given variable, i.e. is supported on that single
/// variable with all exponents of the stated parity.
bool in_single_variable_family(const Polynomial& p, int var, int parity);

/// Skew derivations D_i, D_i' and automorphisms beta_i twisting A by the
/// q-parameters.  The q's must lie in C[y^2], C[x^2], C[z^2] for the
/// discrete-torsion preset and in yC[y^2], xC[x^2], zC[z^2] for the
/// trivial one; anything else throws std::invalid_argument.
OperatorFamily build_action(const CrossedContext& ctx, const Polynomial& q1,
                            const Polynomial& q2, const Polynomial& q3);

/// The alternative family d_i, d_i', gamma_i attached to the p-parameters
/// (true integer exponent coefficients, an extra z factor in d_1 and d_2
/// as displayed); it fails to be an H1-module structure.
OperatorFamily build_d_action(const CrossedContext& ctx, const Polynomial& p1,
                              const Polynomial& p2, const Polynomial& p3);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;  // rendered description when failed
};

struct ModuleAlgebraReport {
  bool all_passed = true;
  std::vector<AxiomResult> axioms;

  const AxiomResult* find(const std::string& axiom) const;
};

/// Verifies, over basis symbols/pairs of monomial degree <= d_max:
/// automorphism and involution laws for beta_i, the two skew-derivation
/// rules, the H1 relations as operator identities, cross-index
/// commutation, and (when all three indices are present) the vanishing
/// compositions D1D3 = D2D3' = D1'D2' = 0.  All axioms are evaluated and
/// reported; a failed axiom carries its first witness.
ModuleAlgebraReport module_algebra_check(const OperatorFamily& fam, const CrossedContext& ctx,
                                         int d_max, std::vector<int> indices = {0, 1, 2});

/// Applies an element of (H (x) H)[t] to a pair of A-elements:
/// sum of t^deg . (first-block operator)(u) * (second-block operator)(v).
TElement apply_pair(const HopfTensor& F, const OperatorFamily& fam, const CrossedContext& ctx,
                    const CrossedElement& u, const CrossedElement& v);

}  // namespace crossdef
