#include "crossdef/action.hpp"

#include <stdexcept>

#include "crossdef/format.hpp"

namespace crossdef {

OperatorOnA OperatorOnA::identity() {
  return OperatorOnA([](const Exponents& mono, int sigma) {
    return CrossedElement::basis(mono, sigma);
  });
}

CrossedElement OperatorOnA::apply(const CrossedElement& u) const {
  CrossedElement r;
  for (const auto& [k, c] : u.terms()) r += rule_(k.mono, k.sigma) * c;
  return r;
}

OperatorOnA OperatorOnA::compose(const OperatorOnA& other) const {
  OperatorOnA outer = *this;
  OperatorOnA inner = other;
  return OperatorOnA([outer, inner](const Exponents& mono, int sigma) {
    return outer.apply(inner.on_basis(mono, sigma));
  });
}

OperatorOnA OperatorFamily::word_operator(int i, std::uint8_t word) const {
  OperatorOnA op = OperatorOnA::identity();
  // Basis word D^a D'^b beta^c acts as D after D' after beta.
  if (word & h1::kBeta) op = beta[i];
  if (word & h1::kDp) op = Dp[i].compose(op);
  if (word & h1::kD) op = D[i].compose(op);
  return op;
}

OperatorOnA OperatorFamily::tuple_operator(const std::vector<std::uint8_t>& words) const {
  if (words.size() != 3) throw std::invalid_argument("tuple_operator: three slots expected");
  OperatorOnA op = word_operator(2, words[2]);
  op = word_operator(1, words[1]).compose(op);
  op = word_operator(0, words[0]).compose(op);
  return op;
}

bool in_single_variable_family(const Polynomial& p, int var, int parity) {
  for (const auto& [e, c] : p.terms()) {
    for (size_t v = 0; v < e.size(); ++v)
      if (static_cast<int>(v) != var && e[v] != 0) return false;
    if (e[var] % 2 != parity) return false;
  }
  return true;
}

namespace {

constexpr int kX = 0, kY = 1, kZ = 2;

int parity(int e) { return ((e % 2) + 2) % 2; }

// scalar * x^monomial (shifted at `var` by -1 when lower) * extra * [g0] * sigma-bar
CrossedElement twisted_term(const CrossedContext& ctx, const Exponents& mono, int sigma,
                            int lower_var, const Polynomial& extra, int g0,
                            GaussRational scalar) {
  Exponents m = mono;
  m[lower_var] -= 1;
  if (m[lower_var] < 0) return {};
  CrossedElement left;
  for (const auto& [e, c] : extra.terms())
    left.add_term({exp_add(m, e), g0}, c * scalar);
  if (g0 == AbelianGroup::identity() && sigma == AbelianGroup::identity()) return left;
  return ctx.mul(left, CrossedElement::basis(Exponents(3, 0), sigma));
}

}  // namespace

OperatorFamily build_action(const CrossedContext& ctx, const Polynomial& q1,
                            const Polynomial& q2, const Polynomial& q3) {
  if (!ctx.is_klein()) throw std::domain_error("build_action: Klein context required");
  const bool dt = ctx.data().name == "klein-dt";
  const int qpar = dt ? 0 : 1;
  if (!in_single_variable_family(q1, kY, qpar) ||
      !in_single_variable_family(q2, kX, qpar) ||
      !in_single_variable_family(q3, kZ, qpar))
    throw std::invalid_argument(
        "build_action: q parameters outside the allowed single-variable families");

  const int ea = ctx.data().element_by_name("a");
  const int eb = ctx.data().element_by_name("b");
  const int ec = ctx.data().element_by_name("c");
  const Polynomial one = Polynomial::constant(GaussRational::one(), 3);
  const int id = AbelianGroup::identity();

  OperatorFamily fam;
  fam.q = {q1, q2, q3};

  fam.D[0] = OperatorOnA([&ctx, one, id](const Exponents& m, int s) {
    if (parity(m[kX]) == 0) return CrossedElement::zero();
    return twisted_term(ctx, m, s, kX, one, id, ctx.data().action.char_value(kX, s));
  });
  fam.Dp[0] = OperatorOnA([&ctx, q1, ea](const Exponents& m, int s) {
    if (parity(m[kZ]) == 0) return CrossedElement::zero();
    GaussRational sgn = m[kX] % 2 == 0 ? GaussRational(1) : GaussRational(-1);
    return twisted_term(ctx, m, s, kZ, q1, ea, sgn);
  });
  fam.D[1] = OperatorOnA([&ctx, q2, ec](const Exponents& m, int s) {
    if (parity(m[kY]) == 0) return CrossedElement::zero();
    return twisted_term(ctx, m, s, kY, q2, ec, ctx.data().action.char_value(kZ, s));
  });
  fam.Dp[1] = OperatorOnA([&ctx, one, id](const Exponents& m, int s) {
    if (parity(m[kZ]) == 0) return CrossedElement::zero();
    return twisted_term(ctx, m, s, kZ, one, id, GaussRational::one());
  });
  fam.D[2] = OperatorOnA([&ctx, q3, eb](const Exponents& m, int s) {
    if (parity(m[kX]) == 0) return CrossedElement::zero();
    return twisted_term(ctx, m, s, kX, q3, eb, ctx.data().action.char_value(kY, s));
  });
  fam.Dp[2] = OperatorOnA([&ctx, one, id](const Exponents& m, int s) {
    if (parity(m[kY]) == 0) return CrossedElement::zero();
    return twisted_term(ctx, m, s, kY, one, id, GaussRational::one());
  });

  auto sign_char = [&ctx](int var) {
    return OperatorOnA([&ctx, var](const Exponents& m, int s) {
      GaussRational c = ctx.data().action.char_value(var, s);
      if (m[var] % 2 != 0) c = -c;
      return CrossedElement::basis(m, s, c);
    });
  };
  fam.beta[0] = sign_char(kX);
  fam.beta[1] = sign_char(kZ);
  fam.beta[2] = sign_char(kY);
  return fam;
}

OperatorFamily build_d_action(const CrossedContext& ctx, const Polynomial& p1,
                              const Polynomial& p2, const Polynomial& p3) {
  if (!ctx.is_klein()) throw std::domain_error("build_d_action: Klein context required");
  const int id = AbelianGroup::identity();
  const Polynomial z_poly = Polynomial::variable_power(3, kZ, 1);
  const Polynomial one = Polynomial::constant(GaussRational::one(), 3);

  OperatorFamily fam;
  fam.q = {p1, p2, p3};

  fam.D[0] = OperatorOnA([&ctx, p1, z_poly, id](const Exponents& m, int s) {
    if (m[kX] == 0) return CrossedElement::zero();
    GaussRational c = ctx.data().action.char_value(kZ, s) * GaussRational(m[kX]);
    return twisted_term(ctx, m, s, kX, z_poly * p1, id, c);
  });
  fam.D[1] = OperatorOnA([&ctx, p2, z_poly, id](const Exponents& m, int s) {
    if (m[kY] == 0) return CrossedElement::zero();
    GaussRational c = ctx.data().action.char_value(kZ, s) * GaussRational(m[kY]);
    return twisted_term(ctx, m, s, kY, z_poly * p2, id, c);
  });
  fam.D[2] = OperatorOnA([&ctx, p3, id](const Exponents& m, int s) {
    if (m[kX] == 0) return CrossedElement::zero();
    GaussRational c = ctx.data().action.char_value(kY, s) * GaussRational(m[kX]);
    return twisted_term(ctx, m, s, kX, p3, id, c);
  });
  auto lower_int = [&ctx, one, id](int var) {
    return OperatorOnA([&ctx, one, id, var](const Exponents& m, int s) {
      if (m[var] == 0) return CrossedElement::zero();
      return twisted_term(ctx, m, s, var, one, id, GaussRational(m[var]));
    });
  };
  fam.Dp[0] = lower_int(kZ);
  fam.Dp[1] = fam.Dp[0];
  fam.Dp[2] = lower_int(kY);

  auto char_only = [&ctx](int var) {
    return OperatorOnA([&ctx, var](const Exponents& m, int s) {
      return CrossedElement::basis(m, s, ctx.data().action.char_value(var, s));
    });
  };
  fam.beta[0] = char_only(kZ);
  fam.beta[1] = fam.beta[0];
  fam.beta[2] = char_only(kY);
  return fam;
}

const AxiomResult* ModuleAlgebraReport::find(const std::string& axiom) const {
  for (const auto& a : axioms)
    if (a.axiom == axiom) return &a;
  return nullptr;
}

namespace {

struct Sweeper {
  const CrossedContext& ctx;
  std::vector<Exponents> monos;

  explicit Sweeper(const CrossedContext& c, int d_max)
      : ctx(c), monos(monomials_up_to_degree(c.nvars(), d_max)) {}

  // First basis symbol where the two operators differ.
  std::optional<std::string> differ(const OperatorOnA& f, const OperatorOnA& g) const {
    for (const auto& m : monos)
      for (int s = 0; s < ctx.group_size(); ++s) {
        CrossedElement a = f.on_basis(m, s), b = g.on_basis(m, s);
        if (!(a == b))
          return format(CrossedElement::basis(m, s), ctx.data()) + ": " +
                 format(a, ctx.data()) + " vs " + format(b, ctx.data());
      }
    return std::nullopt;
  }

  std::optional<std::string> nonzero(const OperatorOnA& f) const {
    for (const auto& m : monos)
      for (int s = 0; s < ctx.group_size(); ++s) {
        CrossedElement a = f.on_basis(m, s);
        if (!a.is_zero())
          return format(CrossedElement::basis(m, s), ctx.data()) + " -> " +
                 format(a, ctx.data());
      }
    return std::nullopt;
  }

  // First basis pair violating rule(u, v) == 0 (rule returns lhs - rhs).
  std::optional<std::string> pair_differ(
      const std::function<CrossedElement(const CrossedElement&, const CrossedElement&)>& lhs,
      const std::function<CrossedElement(const CrossedElement&, const CrossedElement&)>& rhs,
      int d_max) const {
    for (const auto& mu : monos)
      for (const auto& mv : monos) {
        if (total_degree(mu) + total_degree(mv) > d_max) continue;
        for (int su = 0; su < ctx.group_size(); ++su)
          for (int sv = 0; sv < ctx.group_size(); ++sv) {
            CrossedElement u = CrossedElement::basis(mu, su);
            CrossedElement v = CrossedElement::basis(mv, sv);
            CrossedElement a = lhs(u, v), b = rhs(u, v);
            if (!(a == b))
              return "(" + format(u, ctx.data()) + ", " + format(v, ctx.data()) + "): " +
                     format(a, ctx.data()) + " vs " + format(b, ctx.data());
          }
      }
    return std::nullopt;
  }
};

}  // namespace

ModuleAlgebraReport module_algebra_check(const OperatorFamily& fam, const CrossedContext& ctx,
                                         int d_max, std::vector<int> indices) {
  ModuleAlgebraReport report;
  Sweeper sw(ctx, d_max);

  auto record = [&report](const std::string& name, std::optional<std::string> witness) {
    AxiomResult r{name, !witness.has_value(), witness.value_or("")};
    report.all_passed = report.all_passed && r.passed;
    report.axioms.push_back(std::move(r));
  };

  for (int i : indices) {
    const std::string n = std::to_string(i + 1);
    const OperatorOnA &D = fam.D[i], &Dp = fam.Dp[i], &B = fam.beta[i];

    record("beta" + n + "_automorphism",
           sw.pair_differ(
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return B.apply(ctx.mul(u, v));
               },
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return ctx.mul(B.apply(u), B.apply(v));
               },
               d_max));
    record("beta" + n + "_involution", sw.differ(B.compose(B), OperatorOnA::identity()));
    record("D" + n + "_skew",
           sw.pair_differ(
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return D.apply(ctx.mul(u, v));
               },
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return ctx.mul(D.apply(u), B.apply(v)) + ctx.mul(u, D.apply(v));
               },
               d_max));
    record("Dp" + n + "_skew",
           sw.pair_differ(
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return Dp.apply(ctx.mul(u, v));
               },
               [&](const CrossedElement& u, const CrossedElement& v) {
                 return ctx.mul(Dp.apply(u), v) + ctx.mul(B.apply(u), Dp.apply(v));
               },
               d_max));
    record("D" + n + "_square_zero", sw.nonzero(D.compose(D)));
    record("Dp" + n + "_square_zero", sw.nonzero(Dp.compose(Dp)));
    record("D" + n + "_Dp" + n + "_commute", sw.differ(D.compose(Dp), Dp.compose(D)));
    OperatorOnA neg_bd([&B, &D](const Exponents& m, int s) {
      return B.apply(D.on_basis(m, s)) * GaussRational(-1);
    });
    record("D" + n + "_beta" + n + "_anticommute", sw.differ(D.compose(B), neg_bd));
    OperatorOnA neg_bdp([&B, &Dp](const Exponents& m, int s) {
      return B.apply(Dp.on_basis(m, s)) * GaussRational(-1);
    });
    record("Dp" + n + "_beta" + n + "_anticommute", sw.differ(Dp.compose(B), neg_bdp));
  }

  for (size_t a = 0; a < indices.size(); ++a) {
    for (size_t b = a + 1; b < indices.size(); ++b) {
      int i = indices[a], j = indices[b];
      const std::string name =
          "cross_" + std::to_string(i + 1) + std::to_string(j + 1) + "_commute";
      std::optional<std::string> witness;
      const std::array<std::pair<std::string, const OperatorOnA*>, 3> gens_i = {
          {{"D", &fam.D[i]}, {"D'", &fam.Dp[i]}, {"beta", &fam.beta[i]}}};
      const std::array<std::pair<std::string, const OperatorOnA*>, 3> gens_j = {
          {{"D", &fam.D[j]}, {"D'", &fam.Dp[j]}, {"beta", &fam.beta[j]}}};
      for (const auto& [ni, gi] : gens_i) {
        for (const auto& [nj, gj] : gens_j) {
          if (witness) break;
          auto w = sw.differ(gi->compose(*gj), gj->compose(*gi));
          if (w)
            witness = ni + std::to_string(i + 1) + " vs " + nj + std::to_string(j + 1) + " at " +
                      *w;
        }
        if (witness) break;
      }
      AxiomResult r{name, !witness.has_value(), witness.value_or("")};
      report.all_passed = report.all_passed && r.passed;
      report.axioms.push_back(std::move(r));
    }
  }

  if (indices == std::vector<int>{0, 1, 2}) {
    auto rec = [&](const std::string& name, const OperatorOnA& op) {
      auto w = sw.nonzero(op);
      AxiomResult r{name, !w.has_value(), w.value_or("")};
      report.all_passed = report.all_passed && r.passed;
      report.axioms.push_back(std::move(r));
    };
    rec("D1D3_vanishes", fam.D[0].compose(fam.D[2]));
    rec("D2Dp3_vanishes", fam.D[1].compose(fam.Dp[2]));
    rec("Dp1Dp2_vanishes", fam.Dp[0].compose(fam.Dp[1]));
  }
  return report;
}

TElement apply_pair(const HopfTensor& F, const OperatorFamily& fam, const CrossedContext& ctx,
                    const CrossedElement& u, const CrossedElement& v) {
  if (F.slots() != 6) throw std::invalid_argument("apply_pair: F must live in (H (x) H)[t]");
  TElement out;
  for (const auto& [key, c] : F.terms()) {
    const auto& basis = key.second;
    std::vector<std::uint8_t> left(basis.begin(), basis.begin() + 3);
    std::vector<std::uint8_t> right(basis.begin() + 3, basis.end());
    CrossedElement a = fam.tuple_operator(left).apply(u);
    if (a.is_zero()) continue;
    CrossedElement b = fam.tuple_operator(right).apply(v);
    if (b.is_zero()) continue;
    out.add(key.first, ctx.mul(a, b) * c);
  }
  return out;
}

}  // namespace crossdef
