#include "crossdef/chainmap.hpp"

#include <stdexcept>

namespace crossdef {

namespace {

constexpr int kNVars = 3;

// psi_n on a single interior tuple 1 (x) m1 (x) ... (x) mn (x) 1.
KoszulChain psi_interior(int n, const std::vector<Exponents>& m) {
  KoszulChain out = KoszulChain::zero(n);
  if (n == 1) {
    const int i = m[0][0], j = m[0][1], k = m[0][2];
    for (int l = 1; l <= i; ++l)
      out.components[0].add_term({{i - l, j, k}, {l - 1, 0, 0}}, GaussRational::one());
    for (int l = 1; l <= j; ++l)
      out.components[1].add_term({{0, j - l, k}, {i, l - 1, 0}}, GaussRational::one());
    for (int l = 1; l <= k; ++l)
      out.components[2].add_term({{0, 0, k - l}, {i, j, l - 1}}, GaussRational::one());
    return out;
  }
  if (n == 2) {
    const int i = m[0][0], j = m[0][1], k = m[0][2];
    const int r = m[1][0], s = m[1][1], t = m[1][2];
    for (int mm = 1; mm <= t; ++mm)
      for (int l = 1; l <= i; ++l)
        out.components[0].add_term({{i - l, j + s, k + t - mm}, {r + l - 1, 0, mm - 1}},
                                   GaussRational::one());
    for (int mm = 1; mm <= t; ++mm)
      for (int l = 1; l <= j + s; ++l)
        out.components[1].add_term({{0, j + s - l, k + t - mm}, {i + r, l - 1, mm - 1}},
                                   GaussRational::one());
    for (int mm = 1; mm <= t; ++mm)
      for (int l = 1; l <= s; ++l)
        out.components[1].add_term({{i, j + s - l, k + t - mm}, {r, l - 1, mm - 1}},
                                   GaussRational(-1));
    for (int mm = 1; mm <= s; ++mm)
      for (int l = 1; l <= i; ++l)
        out.components[2].add_term({{i - l, j + s - mm, k}, {r + l - 1, mm - 1, t}},
                                   GaussRational::one());
    return out;
  }
  if (n == 3) {
    const int i = m[0][0], j = m[0][1], k = m[0][2];
    const int r = m[1][0], s = m[1][1], t = m[1][2];
    const int u = m[2][0], v = m[2][1], w = m[2][2];
    for (int nn = 1; nn <= v; ++nn)
      for (int mm = 1; mm <= t; ++mm)
        for (int l = 1; l <= i; ++l)
          out.components[0].add_term(
              {{i - l, j + s + nn - 1, k + t - mm}, {r + u + l - 1, v - nn, w + mm - 1}},
              GaussRational(-1));
    return out;
  }
  throw std::domain_error("psi: degree must be 1, 2 or 3");
}

}  // namespace

KoszulChain psi(int n, const BarTensor& input) {
  if (input.degree() != n) throw std::domain_error("psi: bar tensor degree mismatch");
  KoszulChain out = KoszulChain::zero(n);
  for (const auto& [slots, c] : input.terms()) {
    std::vector<Exponents> middle(slots.begin() + 1, slots.end() - 1);
    KoszulChain base = psi_interior(n, middle);
    // R^e-linearity over the boundary slots.
    TensorRR boundary = TensorRR::basis(slots.front(), slots.back(), c);
    for (size_t comp = 0; comp < base.components.size(); ++comp)
      out.components[comp] += boundary * base.components[comp];
  }
  return out;
}

std::optional<ChainMapFailure> chain_map_check(int n, int d_max) {
  if (n < 1 || n > 3) throw std::domain_error("chain_map_check: n must be 1, 2 or 3");

  std::vector<std::vector<Exponents>> tuples;
  auto monos = monomials_up_to_degree(kNVars, d_max);
  if (n == 1) {
    for (const auto& a : monos) tuples.push_back({a});
  } else if (n == 2) {
    for (const auto& a : monos)
      for (const auto& b : monos)
        if (total_degree(a) + total_degree(b) <= d_max) tuples.push_back({a, b});
  } else {
    for (const auto& a : monos)
      for (const auto& b : monos)
        for (const auto& c : monos)
          if (total_degree(a) + total_degree(b) + total_degree(c) <= d_max)
            tuples.push_back({a, b, c});
  }

  for (const auto& tuple : tuples) {
    BarTensor bar = BarTensor::interior(tuple);
    KoszulChain via_koszul = koszul_chain_differential(psi(n, bar), kNVars);

    BarTensor lower = bar_differential(bar);
    KoszulChain via_bar = KoszulChain::zero(n - 1);
    if (n == 1) {
      // psi_0 reads a0 (x) a1 as an element of R^e.
      for (const auto& [slots, c] : lower.terms())
        via_bar.components[0].add_term({slots[0], slots[1]}, c);
    } else {
      via_bar = psi(n - 1, lower);
    }
    if (!(via_koszul == via_bar)) return ChainMapFailure{tuple};
  }
  return std::nullopt;
}

CrossedElement lift_cochain_apply(const Cochain& f, const std::vector<CrossedKey>& inputs,
                                  const CrossedContext& ctx) {
  const int n = f.degree;
  if (n < 1 || n > 3) throw std::domain_error("lift_cochain_apply: degree must be 1, 2 or 3");
  if (static_cast<int>(inputs.size()) != n)
    throw std::domain_error("lift_cochain_apply: input arity mismatch");

  // Twist slot j by the product of the preceding group elements.
  std::vector<Exponents> slots;
  int running = AbelianGroup::identity();
  int scalar_pow = 0;
  for (const auto& in : inputs) {
    scalar_pow += ctx.monomial_char_pow(in.mono, running);
    slots.push_back(in.mono);
    running = ctx.group().add(running, in.sigma);
  }

  KoszulChain transported = psi(n, BarTensor::interior(slots));

  // Pair with the cochain: (u (x) v) . f_c = u f_c v in A.
  CrossedElement paired;
  for (size_t comp = 0; comp < transported.components.size(); ++comp) {
    for (const auto& [uv, c] : transported.components[comp].terms()) {
      for (const auto& [fk, fc] : f.components[comp].terms()) {
        int pow = ctx.monomial_char_pow(uv.second, fk.sigma);
        Exponents mono = exp_add(exp_add(uv.first, fk.mono), uv.second);
        paired.add_term({mono, fk.sigma},
                        c * fc * GaussRational::root_of_unity_pow(pow));
      }
    }
  }

  // Multiply the group symbols back on the right.
  CrossedElement result = paired * GaussRational::root_of_unity_pow(scalar_pow);
  for (const auto& in : inputs)
    result = ctx.mul(result, CrossedElement::basis(Exponents(ctx.nvars(), 0), in.sigma));
  return result;
}

Mu1Params Mu1Params::zero(int nvars) {
  Mu1Params prm;
  for (int i = 0; i < 3; ++i) {
    prm.p[i] = Polynomial::zero();
    prm.q[i] = Polynomial::zero();
  }
  (void)nvars;
  return prm;
}

Cochain Mu1Params::cochain(const CrossedContext& ctx) const {
  if (!ctx.is_klein()) throw std::domain_error("Mu1Params: Klein context required");
  const int a = ctx.data().element_by_name("a");
  const int b = ctx.data().element_by_name("b");
  const int c = ctx.data().element_by_name("c");
  Cochain f = Cochain::zero(2);
  f.components[0] = CrossedElement::from_polynomial(p[0]) + CrossedElement::from_polynomial(q[0], a);
  f.components[1] = CrossedElement::from_polynomial(p[1]) + CrossedElement::from_polynomial(q[1], c);
  f.components[2] = CrossedElement::from_polynomial(p[2]) + CrossedElement::from_polynomial(q[2], b);
  return f;
}

CrossedElement mu1_closed_form(const CrossedKey& u, const CrossedKey& v,
                               const Mu1Params& params, const CrossedContext& ctx) {
  if (!ctx.is_klein()) throw std::domain_error("mu1_closed_form: Klein context required");
  const int ea = ctx.data().element_by_name("a");
  const int eb = ctx.data().element_by_name("b");
  const int ec = ctx.data().element_by_name("c");

  const int i = u.mono[0], j = u.mono[1], k = u.mono[2];
  const int l = v.mono[0], m = v.mono[1], n = v.mono[2];

  // Scalar by which sigma acts on the second argument's monomial.
  GaussRational chi = ctx.monomial_scalar(v.mono, u.sigma);

  struct Bracket {
    Exponents mono;       // x^.. y^.. z^.. prefactor, any negative kills it
    long integer_coeff;   // coefficient of the p-part
    int parity_coeff;     // 0/1 coefficient of the q-part
    int sign_exponent;    // (-1)^l or (-1)^m on the q-part
    int q_sigma;          // group symbol attached to the q polynomial
  };
  const std::array<Bracket, 3> brackets = {{
      {{i + l - 1, j + m, k + n - 1}, static_cast<long>(i) * n, (i % 2) * (n % 2), l, ea},
      {{i + l, j + m - 1, k + n - 1}, static_cast<long>(j) * n, (j % 2) * (n % 2), m, ec},
      {{i + l - 1, j + m - 1, k + n}, static_cast<long>(i) * m, (i % 2) * (m % 2), l, eb},
  }};

  CrossedElement braces;
  for (int term = 0; term < 3; ++term) {
    const Bracket& br = brackets[term];
    bool valid = true;
    for (int e : br.mono) valid = valid && e >= 0;
    if (!valid) continue;
    if (br.integer_coeff != 0) {
      for (const auto& [pm, pc] : params.p[term].terms())
        braces.add_term({exp_add(br.mono, pm), AbelianGroup::identity()},
                        pc * GaussRational(br.integer_coeff));
    }
    if (br.parity_coeff != 0) {
      GaussRational sign = (br.sign_exponent % 2 == 0) ? GaussRational(1) : GaussRational(-1);
      for (const auto& [qm, qc] : params.q[term].terms())
        braces.add_term({exp_add(br.mono, qm), br.q_sigma}, qc * sign);
    }
  }

  CrossedElement sigma_tau = ctx.mul(
      CrossedElement::basis(Exponents(3, 0), u.sigma),
      CrossedElement::basis(Exponents(3, 0), v.sigma));
  return ctx.mul(braces * chi, sigma_tau);
}

CrossedElement apply_bilinear(const Bilinear& mu, const CrossedElement& u,
                              const CrossedElement& v) {
  CrossedElement r;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) r += mu(ku, kv) * (cu * cv);
  return r;
}

std::optional<CocycleFailure> cocycle_check(const Bilinear& mu, int d_max,
                                            const CrossedContext& ctx) {
  auto monos = monomials_up_to_degree(ctx.nvars(), d_max);
  const int ng = ctx.group_size();
  for (const auto& mu_ : monos)
    for (const auto& mv : monos)
      for (const auto& mw : monos) {
        if (total_degree(mu_) + total_degree(mv) + total_degree(mw) > d_max) continue;
        for (int su = 0; su < ng; ++su)
          for (int sv = 0; sv < ng; ++sv)
            for (int sw = 0; sw < ng; ++sw) {
              CrossedKey ku{mu_, su}, kv{mv, sv}, kw{mw, sw};
              CrossedElement eu = CrossedElement::basis(mu_, su);
              CrossedElement ev = CrossedElement::basis(mv, sv);
              CrossedElement ew = CrossedElement::basis(mw, sw);
              CrossedElement lhs = ctx.mul(mu(ku, kv), ew) +
                                   apply_bilinear(mu, ctx.mul(eu, ev), ew);
              CrossedElement rhs = apply_bilinear(mu, eu, ctx.mul(ev, ew)) +
                                   ctx.mul(eu, mu(kv, kw));
              if (!(lhs == rhs)) return CocycleFailure{ku, kv, kw};
            }
      }
  return std::nullopt;
}

}  // namespace crossdef
