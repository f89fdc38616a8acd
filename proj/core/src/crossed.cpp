#include "crossdef/crossed.hpp"

#include <stdexcept>

namespace crossdef {

CrossedElement CrossedElement::basis(Exponents mono, int sigma, GaussRational c) {
  CrossedElement e;
  e.add_term({std::move(mono), sigma}, c);
  return e;
}

CrossedElement CrossedElement::from_polynomial(const Polynomial& p, int sigma) {
  CrossedElement e;
  for (const auto& [m, c] : p.terms()) e.add_term({m, sigma}, c);
  return e;
}

int CrossedElement::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k.mono));
  return d;
}

void CrossedElement::add_term(const CrossedKey& k, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CrossedElement CrossedElement::operator+(const CrossedElement& o) const {
  CrossedElement r = *this;
  r += o;
  return r;
}

CrossedElement CrossedElement::operator-(const CrossedElement& o) const {
  CrossedElement r = *this;
  r -= o;
  return r;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

CrossedElement CrossedElement::operator*(const GaussRational& c) const {
  CrossedElement r;
  for (const auto& [k, c0] : terms_) r.add_term(k, c0 * c);
  return r;
}

Polynomial CrossedElement::component(int sigma) const {
  Polynomial p;
  for (const auto& [k, c] : terms_)
    if (k.sigma == sigma) p.add_term(k.mono, c);
  return p;
}

CrossedContext::CrossedContext(GroupData data) : data_(std::move(data)) {
  if (data_.action.nvars() != static_cast<int>(data_.variable_names.size()))
    throw std::invalid_argument("CrossedContext: variable name count mismatch");
  if (static_cast<int>(data_.element_names.size()) != data_.group.size())
    throw std::invalid_argument("CrossedContext: element name count mismatch");
}

bool CrossedContext::is_klein() const {
  return data_.group.factors() == std::vector<int>{2, 2} && nvars() == 3;
}

int CrossedContext::monomial_char_pow(const Exponents& mono, int sigma) const {
  if (static_cast<int>(mono.size()) != nvars())
    throw std::invalid_argument("monomial arity mismatch");
  int k = 0;
  for (int v = 0; v < nvars(); ++v) k += data_.action.char_pow(v, sigma) * mono[v];
  return ((k % 4) + 4) % 4;
}

GaussRational CrossedContext::sigma_bar_inverse_scalar(int sigma) const {
  int k = data_.cocycle.pow(sigma, data_.group.inverse(sigma));
  return GaussRational::root_of_unity_pow(-k);
}

int CrossedContext::conjugation_pow(int sigma, int tau) const {
  const AbelianGroup& g = data_.group;
  int inv = g.inverse(sigma);
  int k = data_.cocycle.pow(sigma, tau) + data_.cocycle.pow(g.add(sigma, tau), inv) -
          data_.cocycle.pow(sigma, inv);
  return ((k % 4) + 4) % 4;
}

CrossedElement CrossedContext::mul(const CrossedElement& u, const CrossedElement& v) const {
  CrossedElement r;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      // (p sigma)(q tau) = p (sigma.q) alpha(sigma,tau) (sigma tau)
      int pow = monomial_char_pow(kv.mono, ku.sigma) + data_.cocycle.pow(ku.sigma, kv.sigma);
      CrossedKey k{exp_add(ku.mono, kv.mono), data_.group.add(ku.sigma, kv.sigma)};
      r.add_term(k, cu * cv * GaussRational::root_of_unity_pow(pow));
    }
  }
  return r;
}

CrossedElement CrossedContext::inner_action(int sigma, const CrossedElement& u) const {
  CrossedElement r;
  for (const auto& [k, c] : u.terms()) {
    int pow = monomial_char_pow(k.mono, sigma) + conjugation_pow(sigma, k.sigma);
    r.add_term(k, c * GaussRational::root_of_unity_pow(pow));
  }
  return r;
}

CrossedElement CrossedContext::apply_linear(
    const CrossedElement& u,
    const std::function<CrossedElement(const Exponents&, int)>& rule) const {
  CrossedElement r;
  for (const auto& [k, c] : u.terms()) r += rule(k.mono, k.sigma) * c;
  return r;
}

std::optional<CrossedContext::CenterWitness> CrossedContext::center_test(
    const CrossedElement& u, int degree_cutoff) const {
  for (const auto& mono : monomials_up_to_degree(nvars(), degree_cutoff)) {
    for (int sigma = 0; sigma < group_size(); ++sigma) {
      CrossedElement s = CrossedElement::basis(mono, sigma);
      if (mul(u, s) != mul(s, u)) return CenterWitness{{mono, sigma}};
    }
  }
  return std::nullopt;
}

}  // namespace crossdef
