#include "crossdef/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crossdef {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exponents exp_add(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::optional<Exponents> exp_sub_checked(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent arity mismatch");
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) return std::nullopt;
  }
  return r;
}

bool grevlex_less(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: compare the reversed exponent sequence, last variable
  // first, larger exponent there means smaller monomial.
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {
void enumerate(int nvars, int var, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    enumerate(nvars, var + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  Exponents cur(nvars, 0);
  enumerate(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

std::vector<Exponents> monomials_up_to_degree(int nvars, int d) {
  std::vector<Exponents> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Polynomial Polynomial::constant(GaussRational c, int nvars) {
  Polynomial p;
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, GaussRational c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable_power(int nvars, int var, int power) {
  Exponents e(nvars, 0);
  e.at(var) = power;
  return monomial(e);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponents& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const GaussRational& c) const {
  Polynomial r;
  for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
  return r;
}

}  // namespace crossdef
