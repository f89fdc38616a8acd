#pragma once

#include <functional>
#include <map>

#include "crossdef/crossed.hpp"

namespace crossdef {

/// Polynomial in the deformation parameter t with CrossedElement
/// coefficients.  Deformed products in scope terminate at finite t-degree,
/// so no truncation is involved; the zero element has no terms.
class TElement {
 public:
  TElement() = default;
  TElement(const CrossedElement& constant) {  // NOLINT(google-explicit-constructor)
    add(0, constant);
  }
  static TElement zero() { return {}; }
  static TElement t_times(int tdeg, const CrossedElement& e) {
    TElement r;
    r.add(tdeg, e);
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Largest t-exponent present; -1 when zero.
  int t_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  const std::map<int, CrossedElement>& coeffs() const { return coeffs_; }
  /// Coefficient of t^d (zero element if absent).
  CrossedElement coeff(int d) const;

  void add(int tdeg, const CrossedElement& e);

  TElement operator+(const TElement& o) const;
  TElement operator-(const TElement& o) const;
  TElement operator*(const GaussRational& c) const;
  TElement operator-() const { return *this * GaussRational(-1); }
  TElement& operator+=(const TElement& o);
  TElement& operator-=(const TElement& o);

  bool operator==(const TElement& o) const = default;

 private:
  std::map<int, CrossedElement> coeffs_;
};

/// A bilinear product on A extended to A[t]: each pair of t-coefficients
/// multiplies through `star` (itself allowed to emit higher t-terms) and
/// t-degrees add (Cauchy product).
TElement t_mul(const TElement& u, const TElement& v,
               const std::function<TElement(const CrossedElement&, const CrossedElement&)>& star);

}  // namespace crossdef
