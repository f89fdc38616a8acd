#pragma once

#include <map>
#include <vector>

#include "crossdef/polynomial.hpp"

namespace crossdef {

/// Element of R (x) R as a sparse map on pairs of exponent vectors.  This
/// is the coefficient ring R^e of the Koszul resolution; multiplication is
/// factor-wise (R is commutative, so the opposite twist is invisible).
class TensorRR {
 public:
  using Key = std::pair<Exponents, Exponents>;

  TensorRR() = default;
  static TensorRR basis(Exponents left, Exponents right,
                        GaussRational c = GaussRational::one());
  static TensorRR unit(int nvars);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussRational>& terms() const { return terms_; }

  void add_term(const Key& k, const GaussRational& c);

  TensorRR operator+(const TensorRR& o) const;
  TensorRR operator-(const TensorRR& o) const;
  TensorRR operator*(const TensorRR& o) const;
  TensorRR operator*(const GaussRational& c) const;
  TensorRR operator-() const { return *this * GaussRational(-1); }
  TensorRR& operator+=(const TensorRR& o);

  /// v (x) 1 - 1 (x) v: the Koszul symbols f, g, h for var = 0, 1, 2.
  static TensorRR koszul_symbol(int nvars, int var);

  bool operator==(const TensorRR& o) const = default;

 private:
  std::map<Key, GaussRational> terms_;
};

/// Chain of the Koszul resolution: a tuple of R^e elements, component
/// counts (1, 3, 3, 1) for degrees 0..3.
struct KoszulChain {
  int degree = 0;
  std::vector<TensorRR> components;

  static KoszulChain zero(int degree);
  bool is_zero() const;
  KoszulChain operator+(const KoszulChain& o) const;
  KoszulChain operator-(const KoszulChain& o) const;
  bool operator==(const KoszulChain& o) const = default;
};

/// The Koszul chain differential (degree n -> n-1, n in {1,2,3}): matrices
/// (f g h), [ -h 0 -g ; 0 -h f ; f g 0 ], column (-g, f, h) acting by
/// multiplication in R^e.
KoszulChain koszul_chain_differential(const KoszulChain& c, int nvars);

/// Element of the bar (Hochschild) resolution restricted to R: a linear
/// combination of slot tuples a0 (x) m1 (x) ... (x) mn (x) a{n+1}, every
/// slot a monomial.  Interior slots carry the resolution degree; boundary
/// slots hold the R^e coefficient.
class BarTensor {
 public:
  using Key = std::vector<Exponents>;  // degree + 2 slots

  explicit BarTensor(int degree) : degree_(degree) {}
  /// 1 (x) m1 (x) ... (x) mn (x) 1.
  static BarTensor interior(const std::vector<Exponents>& middle);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussRational>& terms() const { return terms_; }

  void add_term(const Key& k, const GaussRational& c);
  BarTensor operator+(const BarTensor& o) const;

  bool operator==(const BarTensor& o) const = default;

 private:
  int degree_;
  std::map<Key, GaussRational> terms_;
};

/// Bar differential: merges adjacent slots with alternating signs,
/// degree n -> n-1 (n >= 1).
BarTensor bar_differential(const BarTensor& t);

}  // namespace crossdef
