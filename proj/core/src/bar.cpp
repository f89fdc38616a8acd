#include "crossdef/bar.hpp"

#include <stdexcept>

namespace crossdef {

TensorRR TensorRR::basis(Exponents left, Exponents right, GaussRational c) {
  TensorRR t;
  t.add_term({std::move(left), std::move(right)}, c);
  return t;
}

TensorRR TensorRR::unit(int nvars) {
  return basis(Exponents(nvars, 0), Exponents(nvars, 0));
}

void TensorRR::add_term(const Key& k, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorRR TensorRR::operator+(const TensorRR& o) const {
  TensorRR r = *this;
  r += o;
  return r;
}

TensorRR& TensorRR::operator+=(const TensorRR& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorRR TensorRR::operator-(const TensorRR& o) const {
  TensorRR r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

TensorRR TensorRR::operator*(const TensorRR& o) const {
  TensorRR r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term({exp_add(k1.first, k2.first), exp_add(k1.second, k2.second)}, c1 * c2);
  return r;
}

TensorRR TensorRR::operator*(const GaussRational& c) const {
  TensorRR r;
  for (const auto& [k, c0] : terms_) r.add_term(k, c0 * c);
  return r;
}

TensorRR TensorRR::koszul_symbol(int nvars, int var) {
  Exponents v(nvars, 0);
  v[var] = 1;
  Exponents one(nvars, 0);
  TensorRR t = basis(v, one);
  t.add_term({one, v}, GaussRational(-1));
  return t;
}

KoszulChain KoszulChain::zero(int degree) {
  int rank = (degree == 0 || degree == 3) ? 1 : (degree == 1 || degree == 2) ? 3 : -1;
  if (rank < 0) throw std::domain_error("Koszul chain degree out of range 0..3");
  return {degree, std::vector<TensorRR>(rank)};
}

bool KoszulChain::is_zero() const {
  for (const auto& t : components)
    if (!t.is_zero()) return false;
  return true;
}

KoszulChain KoszulChain::operator+(const KoszulChain& o) const {
  if (degree != o.degree) throw std::invalid_argument("chain degree mismatch");
  KoszulChain r = *this;
  for (size_t i = 0; i < components.size(); ++i) r.components[i] += o.components[i];
  return r;
}

KoszulChain KoszulChain::operator-(const KoszulChain& o) const {
  if (degree != o.degree) throw std::invalid_argument("chain degree mismatch");
  KoszulChain r = *this;
  for (size_t i = 0; i < components.size(); ++i)
    r.components[i] = r.components[i] - o.components[i];
  return r;
}

KoszulChain koszul_chain_differential(const KoszulChain& c, int nvars) {
  TensorRR f = TensorRR::koszul_symbol(nvars, 0);
  TensorRR g = TensorRR::koszul_symbol(nvars, 1);
  TensorRR h = TensorRR::koszul_symbol(nvars, 2);
  const auto& comp = c.components;
  switch (c.degree) {
    case 1: {
      KoszulChain r = KoszulChain::zero(0);
      r.components[0] = f * comp[0] + g * comp[1] + h * comp[2];
      return r;
    }
    case 2: {
      // delta_2 = [ -h 0 -g ; 0 -h f ; f g 0 ]
      KoszulChain r = KoszulChain::zero(1);
      r.components[0] = -(h * comp[0]) - g * comp[2];
      r.components[1] = -(h * comp[1]) + f * comp[2];
      r.components[2] = f * comp[0] + g * comp[1];
      return r;
    }
    case 3: {
      // delta_3 = column (-g, f, h)
      KoszulChain r = KoszulChain::zero(2);
      r.components[0] = -(g * comp[0]);
      r.components[1] = f * comp[0];
      r.components[2] = h * comp[0];
      return r;
    }
    default:
      throw std::domain_error("koszul_chain_differential: degree out of range 1..3");
  }
}

BarTensor BarTensor::interior(const std::vector<Exponents>& middle) {
  if (middle.empty()) throw std::invalid_argument("BarTensor: empty interior");
  int nvars = static_cast<int>(middle.front().size());
  BarTensor t(static_cast<int>(middle.size()));
  Key k;
  k.push_back(Exponents(nvars, 0));
  for (const auto& m : middle) k.push_back(m);
  k.push_back(Exponents(nvars, 0));
  t.add_term(k, GaussRational::one());
  return t;
}

void BarTensor::add_term(const Key& k, const GaussRational& c) {
  if (static_cast<int>(k.size()) != degree_ + 2)
    throw std::invalid_argument("BarTensor: slot count mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BarTensor BarTensor::operator+(const BarTensor& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("BarTensor degree mismatch");
  BarTensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

BarTensor bar_differential(const BarTensor& t) {
  if (t.degree() < 1) throw std::domain_error("bar_differential: degree must be >= 1");
  BarTensor out(t.degree() - 1);
  for (const auto& [k, c] : t.terms()) {
    for (size_t i = 0; i + 1 < k.size(); ++i) {
      BarTensor::Key merged;
      merged.reserve(k.size() - 1);
      for (size_t j = 0; j < k.size(); ++j) {
        if (j == i) {
          merged.push_back(exp_add(k[i], k[i + 1]));
          ++j;  // consumed both
        } else {
          merged.push_back(k[j]);
        }
      }
      out.add_term(merged, (i % 2 == 0) ? c : -c);
    }
  }
  return out;
}

}  // namespace crossdef
