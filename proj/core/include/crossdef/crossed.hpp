#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "crossdef/group.hpp"
#include "crossdef/polynomial.hpp"

namespace crossdef {

/// Basis symbol x^e * sigma-bar of the crossed product, addressed by the
/// monomial exponents and the group element rank.
struct CrossedKey {
  Exponents mono;
  int sigma = AbelianGroup::identity();

  auto operator<=>(const CrossedKey&) const = default;
};

/// Display order for terms: descending grevlex on the monomial (leading
/// terms first), group rank as tie-breaker.
struct CrossedTermOrder {
  bool operator()(const CrossedKey& a, const CrossedKey& b) const {
    if (a.mono != b.mono) return grevlex_less(b.mono, a.mono);
    return a.sigma < b.sigma;
  }
};

/// Element of the crossed product R #_alpha G: a finite Q(i)-linear
/// combination of basis symbols, kept in canonical sparse form.
class CrossedElement {
 public:
  CrossedElement() = default;
  static CrossedElement zero() { return {}; }
  static CrossedElement basis(Exponents mono, int sigma,
                              GaussRational c = GaussRational::one());
  /// Embeds a polynomial as p * identity-bar.
  static CrossedElement from_polynomial(const Polynomial& p, int sigma = 0);

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::map<CrossedKey, GaussRational, CrossedTermOrder>& terms() const { return terms_; }

  /// Largest monomial total degree present; -1 when zero.
  int degree() const;

  void add_term(const CrossedKey& k, const GaussRational& c);

  CrossedElement operator+(const CrossedElement& o) const;
  CrossedElement operator-(const CrossedElement& o) const;
  CrossedElement operator*(const GaussRational& c) const;
  CrossedElement operator-() const { return *this * GaussRational(-1); }
  CrossedElement& operator+=(const CrossedElement& o);
  CrossedElement& operator-=(const CrossedElement& o);

  /// The sigma-component: partial sum over terms with this group element,
  /// as a polynomial.
  Polynomial component(int sigma) const;

  bool operator==(const CrossedElement& o) const = default;

 private:
  std::map<CrossedKey, GaussRational, CrossedTermOrder> terms_;
};

/// The crossed product algebra A = R #_alpha G for a fixed group datum:
/// multiplication, the inner G-action, and centrality probes.  Immutable
/// after construction; all operations are const.
class CrossedContext {
 public:
  explicit CrossedContext(GroupData data);

  const GroupData& data() const { return data_; }
  const AbelianGroup& group() const { return data_.group; }
  int nvars() const { return data_.action.nvars(); }
  int group_size() const { return data_.group.size(); }
  bool is_klein() const;

  /// i-exponent of the scalar by which sigma acts on the monomial:
  /// sigma . m = i^k m.
  int monomial_char_pow(const Exponents& mono, int sigma) const;
  GaussRational monomial_scalar(const Exponents& mono, int sigma) const {
    return GaussRational::root_of_unity_pow(monomial_char_pow(mono, sigma));
  }

  /// alpha(sigma, sigma^-1)^-1: the scalar c with (sigma-bar)^-1 equal to
  /// c times the basis symbol of sigma^-1.
  GaussRational sigma_bar_inverse_scalar(int sigma) const;

  /// i-exponent of the scalar picked up when conjugating the basis symbol
  /// of tau by sigma-bar: sigma-bar tau-bar sigma-bar^-1 = i^k tau-bar.
  int conjugation_pow(int sigma, int tau) const;

  CrossedElement mul(const CrossedElement& u, const CrossedElement& v) const;
  /// sigma . u = sigma-bar u sigma-bar^-1 (inner action).
  CrossedElement inner_action(int sigma, const CrossedElement& u) const;

  /// Applies a basis-wise rule linearly over the terms of u.
  CrossedElement apply_linear(
      const CrossedElement& u,
      const std::function<CrossedElement(const Exponents&, int)>& rule) const;

  struct CenterWitness {
    CrossedKey basis;  // a basis symbol that fails to commute
  };
  /// True iff u commutes with every basis symbol of monomial degree <=
  /// degree_cutoff (all group elements included).
  std::optional<CenterWitness> center_test(const CrossedElement& u, int degree_cutoff) const;

 private:
  GroupData data_;
};

}  // namespace crossdef
