#include "crossdef/tpoly.hpp"

namespace crossdef {

CrossedElement TElement::coeff(int d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? CrossedElement::zero() : it->second;
}

void TElement::add(int tdeg, const CrossedElement& e) {
  if (e.is_zero()) return;
  auto it = coeffs_.find(tdeg);
  if (it == coeffs_.end()) {
    coeffs_.emplace(tdeg, e);
  } else {
    it->second += e;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TElement TElement::operator+(const TElement& o) const {
  TElement r = *this;
  r += o;
  return r;
}

TElement TElement::operator-(const TElement& o) const {
  TElement r = *this;
  r -= o;
  return r;
}

TElement& TElement::operator+=(const TElement& o) {
  for (const auto& [d, e] : o.coeffs_) add(d, e);
  return *this;
}

TElement& TElement::operator-=(const TElement& o) {
  for (const auto& [d, e] : o.coeffs_) add(d, -e);
  return *this;
}

TElement TElement::operator*(const GaussRational& c) const {
  TElement r;
  if (c.is_zero()) return r;
  for (const auto& [d, e] : coeffs_) r.add(d, e * c);
  return r;
}

TElement t_mul(const TElement& u, const TElement& v,
               const std::function<TElement(const CrossedElement&, const CrossedElement&)>& star) {
  TElement r;
  for (const auto& [du, eu] : u.coeffs()) {
    for (const auto& [dv, ev] : v.coeffs()) {
      TElement part = star(eu, ev);
      for (const auto& [dp, ep] : part.coeffs()) r.add(du + dv + dp, ep);
    }
  }
  return r;
}

}  // namespace crossdef
