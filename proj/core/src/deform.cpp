#include "crossdef/deform.hpp"

#include <sstream>
#include <stdexcept>

#include "crossdef/format.hpp"

namespace crossdef {

StarContext make_star_context(const CrossedContext& ctx, const Polynomial& q1,
                              const Polynomial& q2, const Polynomial& q3,
                              DeformationFormula formula) {
  StarContext sc;
  sc.ctx = &ctx;
  sc.formula = formula;
  sc.family = build_action(ctx, q1, q2, q3);
  sc.q = {q1, q2, q3};
  if (formula == DeformationFormula::kTripleProduct) {
    sc.F = udf_factor(3, 0) * udf_factor(3, 1) * udf_factor(3, 2);
    sc.active_q = sc.q;
  } else {
    sc.F = udf_factor(3, 0);
    sc.active_q = {q1, Polynomial::zero(), Polynomial::zero()};
  }
  return sc;
}

TElement star_mul(const StarContext& sc, const CrossedElement& u, const CrossedElement& v) {
  return apply_pair(sc.F, sc.family, *sc.ctx, u, v);
}

TElement star_mul_t(const StarContext& sc, const TElement& u, const TElement& v) {
  return t_mul(u, v, [&sc](const CrossedElement& a, const CrossedElement& b) {
    return star_mul(sc, a, b);
  });
}

std::optional<TripleWitness> associativity_check(const StarContext& sc, int d_max) {
  const CrossedContext& ctx = *sc.ctx;
  auto monos = monomials_up_to_degree(ctx.nvars(), d_max);
  const int ng = ctx.group_size();
  for (const auto& mu : monos)
    for (const auto& mv : monos)
      for (const auto& mw : monos) {
        if (total_degree(mu) + total_degree(mv) + total_degree(mw) > d_max) continue;
        for (int su = 0; su < ng; ++su)
          for (int sv = 0; sv < ng; ++sv)
            for (int sw = 0; sw < ng; ++sw) {
              CrossedElement u = CrossedElement::basis(mu, su);
              CrossedElement v = CrossedElement::basis(mv, sv);
              CrossedElement w = CrossedElement::basis(mw, sw);
              TElement left = star_mul_t(sc, star_mul(sc, u, v), TElement(w));
              TElement right = star_mul_t(sc, TElement(u), star_mul(sc, v, w));
              if (!(left == right))
                return TripleWitness{{mu, su}, {mv, sv}, {mw, sw}};
            }
      }
  return std::nullopt;
}

std::optional<PairWitness> first_order_check(const StarContext& sc, int d_max) {
  const CrossedContext& ctx = *sc.ctx;
  Mu1Params params = Mu1Params::zero();
  params.q = sc.active_q;
  auto monos = monomials_up_to_degree(ctx.nvars(), d_max);
  const int ng = ctx.group_size();
  for (const auto& mu : monos)
    for (const auto& mv : monos) {
      if (total_degree(mu) + total_degree(mv) > d_max) continue;
      for (int su = 0; su < ng; ++su)
        for (int sv = 0; sv < ng; ++sv) {
          CrossedKey ku{mu, su}, kv{mv, sv};
          CrossedElement t1 =
              star_mul(sc, CrossedElement::basis(mu, su), CrossedElement::basis(mv, sv))
                  .coeff(1);
          if (!(t1 == mu1_closed_form(ku, kv, params, ctx))) return PairWitness{ku, kv};
        }
    }
  return std::nullopt;
}

TElement central_w(const StarContext& sc) {
  if (!sc.discrete_torsion() || sc.formula != DeformationFormula::kTripleProduct)
    throw std::domain_error("central_w: discrete-torsion triple-product context required");
  const CrossedContext& ctx = *sc.ctx;
  const int ea = ctx.data().element_by_name("a");
  const int eb = ctx.data().element_by_name("b");
  const int ec = ctx.data().element_by_name("c");
  TElement w{CrossedElement::basis({1, 1, 1}, AbelianGroup::identity())};
  const GaussRational half(Rational(1, 2));
  CrossedElement order1;
  auto add = [&order1](const Polynomial& q, const Exponents& var_mono, int g) {
    for (const auto& [e, c] : q.terms()) order1.add_term({exp_add(var_mono, e), g}, c);
  };
  add(sc.q[0], {0, 1, 0}, ea);  // y q1 a-bar
  add(sc.q[1], {1, 0, 0}, ec);  // x q2 c-bar
  add(sc.q[2], {0, 0, 1}, eb);  // z q3 b-bar
  w.add(1, order1 * half);
  return w;
}

TElement w_square(const StarContext& sc) {
  TElement w = central_w(sc);
  return star_mul_t(sc, w, w);
}

std::string format_hat(const HatPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, coeff] : p) {
    GaussRational mag = coeff;
    bool neg = (coeff.im() == 0 && coeff.re() < 0) || (coeff.re() == 0 && coeff.im() < 0);
    if (neg) mag = -coeff;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    auto push = [&factors](const char* name, int e) {
      if (e == 0) return;
      std::string f = name;
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    };
    push("t", k.t);
    push("X", k.a);
    push("Y", k.b);
    push("Z", k.c);
    push("W", k.w);
    std::string coeff_str;
    if (mag.re() != 0 && mag.im() != 0) {
      coeff_str = "(" + mag.str() + ")";
    } else if (!mag.is_one()) {
      coeff_str = mag.str();
    }
    if (coeff_str.empty() && factors.empty()) {
      os << "1";
      continue;
    }
    bool star = false;
    if (!coeff_str.empty()) {
      os << coeff_str;
      star = true;
    }
    for (const auto& f : factors) {
      if (star) os << "*";
      os << f;
      star = true;
    }
  }
  return os.str();
}

RewriteResult rewrite_in_center_generators(const TElement& v, const StarContext& sc, int t_max) {
  const CrossedContext& ctx = *sc.ctx;
  TElement w = central_w(sc);
  RewriteResult res;
  TElement rem = v;
  while (!rem.is_zero()) {
    const int tdeg = rem.coeffs().begin()->first;
    const CrossedElement low = rem.coeffs().begin()->second;
    if (tdeg > t_max) {
      res.failure = "rewrite did not terminate by t-degree " + std::to_string(t_max);
      return res;
    }
    TElement subtract;
    for (const auto& [key, coeff] : low.terms()) {
      if (key.sigma != AbelianGroup::identity()) {
        res.failure = "non-identity group component at t^" + std::to_string(tdeg) + ": " +
                      format(CrossedElement::basis(key.mono, key.sigma, coeff), ctx.data());
        return res;
      }
      bool even = key.mono[0] % 2 == 0 && key.mono[1] % 2 == 0 && key.mono[2] % 2 == 0;
      bool odd = key.mono[0] % 2 == 1 && key.mono[1] % 2 == 1 && key.mono[2] % 2 == 1;
      if (!even && !odd) {
        res.failure = "mixed-parity term at t^" + std::to_string(tdeg) + ": " +
                      format(CrossedElement::basis(key.mono, key.sigma, coeff), ctx.data());
        return res;
      }
      HatKey hk{key.mono[0] / 2, key.mono[1] / 2, key.mono[2] / 2, odd ? 1 : 0, tdeg};
      res.poly[hk] += coeff;
      if (res.poly[hk].is_zero()) res.poly.erase(hk);
      // Star-evaluation of the generator monomial: even-exponent monomials
      // star-multiply plainly, so this is the plain monomial, times w when
      // one hat-factor of w is consumed.
      Exponents even_part = {key.mono[0] - (odd ? 1 : 0), key.mono[1] - (odd ? 1 : 0),
                             key.mono[2] - (odd ? 1 : 0)};
      TElement gen{CrossedElement::basis(even_part, AbelianGroup::identity(), coeff)};
      if (odd) gen = star_mul_t(sc, gen, w);
      for (const auto& [gd, ge] : gen.coeffs()) subtract.add(tdeg + gd, ge);
    }
    rem -= subtract;
  }
  res.ok = true;
  return res;
}

CenterProbeResult center_membership_probe(const TElement& v, const StarContext& sc, int d_max,
                                          int t_max) {
  const CrossedContext& ctx = *sc.ctx;
  CenterProbeResult out;
  out.central = true;
  for (const auto& mono : monomials_up_to_degree(ctx.nvars(), d_max)) {
    for (int sigma = 0; sigma < ctx.group_size() && out.central; ++sigma) {
      TElement s{CrossedElement::basis(mono, sigma)};
      if (!(star_mul_t(sc, v, s) == star_mul_t(sc, s, v))) {
        out.central = false;
        out.witness = format(CrossedElement::basis(mono, sigma), ctx.data());
      }
    }
    if (!out.central) break;
  }
  out.rewrite = rewrite_in_center_generators(v, sc, t_max);
  return out;
}

namespace {

HatPoly reference_relation(int i, int j, int k) {
  HatPoly ref;
  ref[{1, 1, 1, 0, 0}] = GaussRational::one();
  ref[{2 * i + 1, 0, 0, 0, 2}] = GaussRational::one();
  ref[{0, 2 * j + 1, 0, 0, 2}] += GaussRational::one();
  ref[{0, 0, 2 * k + 1, 0, 2}] += GaussRational::one();
  ref[{i, j, k, 0, 3}] += GaussRational(Rational(-2)) * GaussRational::imag_unit();
  return ref;
}

}  // namespace

CenterRelationReport center_relation(const CrossedContext& ctx, int i, int j, int k,
                                     const std::array<GaussRational, 3>& scaling) {
  if (i < 0 || j < 0 || k < 0)
    throw std::invalid_argument("center_relation: exponents must be nonnegative");
  CenterRelationReport rep;
  rep.i = i;
  rep.j = j;
  rep.k = k;
  rep.scaling = scaling;
  rep.reference = reference_relation(i, j, k);

  auto monomial_qs = [&](const std::array<GaussRational, 3>& s) {
    return std::array<Polynomial, 3>{
        Polynomial::monomial({0, 2 * j, 0}, s[0]),
        Polynomial::monomial({2 * i, 0, 0}, s[1]),
        Polynomial::monomial({0, 0, 2 * k}, s[2]),
    };
  };

  auto realize = [&](const std::array<GaussRational, 3>& s, HatPoly& out, bool& ok) {
    auto qs = monomial_qs(s);
    StarContext sc = make_star_context(ctx, qs[0], qs[1], qs[2]);
    TElement wsq = w_square(sc);
    RewriteResult rw = rewrite_in_center_generators(wsq, sc, 4 + 2 * (i + j + k));
    ok = rw.ok;
    out = rw.poly;
    return wsq;
  };

  bool ok = false;
  rep.w_square_value = realize(scaling, rep.realized, ok);
  rep.rewrite_ok = ok;
  rep.matches_reference = ok && rep.realized == rep.reference;

  for (GaussRational s : {GaussRational(2), GaussRational(Rational(1, 2))}) {
    HatPoly candidate;
    bool cok = false;
    realize({s, s, s}, candidate, cok);
    bool match = cok && candidate == rep.reference;
    rep.candidate_scalings.emplace_back(s, match);
    if (match && rep.reference_scaling.is_zero()) rep.reference_scaling = s;
  }

  rep.notes.push_back("generators: X = x^2, Y = y^2, Z = z^2, W = w");
  rep.notes.push_back("realized relation: W^2 = " + format_hat(rep.realized));
  rep.notes.push_back("reference relation: W^2 = " + format_hat(rep.reference));
  if (!rep.matches_reference && rep.rewrite_ok) {
    rep.notes.push_back(
        "requested scaling does not reproduce the reference coefficients; "
        "uniform scaling " +
        (rep.reference_scaling.is_zero() ? std::string("<none probed>")
                                         : rep.reference_scaling.str()) +
        " does");
  }
  return rep;
}

}  // namespace crossdef
