#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "crossdef/action.hpp"
#include "crossdef/chainmap.hpp"
#include "crossdef/tpoly.hpp"

namespace crossdef {

/// Which deformation element drives the star product: the full triple
/// product F1 F2 F3 (the discrete-torsion deformation) or the single
/// factor F1 (the trivial-cocycle deformation with q2 = q3 = 0).
enum class DeformationFormula { kTripleProduct, kFirstFactorOnly };

/// Everything needed to star-multiply: the crossed product, the operator
/// family for the chosen q-parameters, and the deformation element in
/// (H (x) H)[t].  The context reference must outlive the StarContext.
struct StarContext {
  const CrossedContext* ctx = nullptr;
  DeformationFormula formula = DeformationFormula::kTripleProduct;
  OperatorFamily family;
  HopfTensor F{6};
  std::array<Polynomial, 3> q;
  /// The q's that actually appear in the t^1 part of F (used as the
  /// first-order reference).
  std::array<Polynomial, 3> active_q;

  bool discrete_torsion() const { return ctx->data().name == "klein-dt"; }
};

/// Builds the star context; build_action validates the q-parameter
/// spaces for the context's preset.
StarContext make_star_context(const CrossedContext& ctx, const Polynomial& q1,
                              const Polynomial& q2, const Polynomial& q3,
                              DeformationFormula formula = DeformationFormula::kTripleProduct);

/// u * v = (m . F)(u (x) v): an exact polynomial in t whose t^0 part is
/// the crossed-product multiplication.
TElement star_mul(const StarContext& sc, const CrossedElement& u, const CrossedElement& v);
/// Star product extended to A[t].
TElement star_mul_t(const StarContext& sc, const TElement& u, const TElement& v);

struct TripleWitness {
  CrossedKey u, v, w;
};
/// (u*v)*w == u*(v*w) over all basis triples of monomial degree <= d_max.
std::optional<TripleWitness> associativity_check(const StarContext& sc, int d_max);

struct PairWitness {
  CrossedKey u, v;
};
/// The t^1 coefficient of u*v equals the closed-form first-order product
/// with p = 0 and the context's active q's, over basis pairs of degree
/// <= d_max.
std::optional<PairWitness> first_order_check(const StarContext& sc, int d_max);

/// w = xyz + (t/2)(y q1 a-bar + x q2 c-bar + z q3 b-bar); requires the
/// discrete-torsion preset with the triple-product formula.
TElement central_w(const StarContext& sc);

/// star_mul(w, w) computed from first principles.
TElement w_square(const StarContext& sc);

/// Monomial in the center generators: xhat^a yhat^b zhat^c what^w t^t
/// with xhat = x^2, yhat = y^2, zhat = z^2, what = w.
struct HatKey {
  int a = 0, b = 0, c = 0, w = 0, t = 0;
  auto operator<=>(const HatKey&) const = default;
};
using HatPoly = std::map<HatKey, GaussRational>;

std::string format_hat(const HatPoly& p);

struct RewriteResult {
  bool ok = false;
  HatPoly poly;
  std::string failure;  // description of the offending term when !ok
};
/// Greedy rewrite of v as a polynomial in xhat, yhat, zhat, what, t:
/// at each lowest t-degree the identity-sector terms must have all-even
/// or all-odd exponents; all-odd terms consume one factor of what.
RewriteResult rewrite_in_center_generators(const TElement& v, const StarContext& sc, int t_max);

struct CenterProbeResult {
  bool central = false;
  std::string witness;  // basis symbol that fails to star-commute
  RewriteResult rewrite;
};
/// Star-commutation with all basis symbols of degree <= d_max plus the
/// generator rewrite attempt.
CenterProbeResult center_membership_probe(const TElement& v, const StarContext& sc, int d_max,
                                          int t_max);

/// Comparison of the realized presentation of the deformed center against
/// the reference relation
///   what^2 = xhat yhat zhat + t^2 (xhat^{2i+1} + yhat^{2j+1} + zhat^{2k+1})
///            - 2i t^3 xhat^i yhat^j zhat^k
/// for monomial parameters q1 = s1 yhat^j, q2 = s2 xhat^i, q3 = s3 zhat^k.
struct CenterRelationReport {
  int i = 0, j = 0, k = 0;
  std::array<GaussRational, 3> scaling;
  TElement w_square_value;
  bool rewrite_ok = false;
  HatPoly realized;            // rewrite of w*w at the requested scaling
  HatPoly reference;           // the displayed relation above
  bool matches_reference = false;
  /// Uniform scalings probed to reproduce the reference coefficients
  /// (1, -2i); each entry is (scaling, matched).
  std::vector<std::pair<GaussRational, bool>> candidate_scalings;
  /// The probed scaling that reproduces the reference exactly (zero when
  /// none does).
  GaussRational reference_scaling;
  std::vector<std::string> notes;
};

CenterRelationReport center_relation(const CrossedContext& ctx, int i, int j, int k,
                                     const std::array<GaussRational, 3>& scaling);

}  // namespace crossdef
