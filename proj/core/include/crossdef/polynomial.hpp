#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "crossdef/gaussian.hpp"

namespace crossdef {

/// Exponent vector of a monomial; entry per variable, always >= 0 when it
/// denotes an actual monomial.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
Exponents exp_add(const Exponents& a, const Exponents& b);
/// a - b; returns nullopt when any entry would go negative (the
/// convention throughout: a negative power kills the term).
std::optional<Exponents> exp_sub_checked(const Exponents& a, const Exponents& b);

/// Graded reverse lexicographic order with earlier variables heavier
/// (x > y > z).  Used wherever a deterministic monomial order is needed.
bool grevlex_less(const Exponents& a, const Exponents& b);

/// Enumerates all monomials in nvars variables of total degree exactly d,
/// in grevlex order.
std::vector<Exponents> monomials_of_degree(int nvars, int d);
/// All monomials of total degree <= d, ordered by (degree, grevlex).
std::vector<Exponents> monomials_up_to_degree(int nvars, int d);

/// Sparse multivariate polynomial over Q(i).  Canonical form: no zero
/// coefficients are stored.  Arity is whatever the exponent vectors say;
/// mixing arities in one polynomial is a caller bug.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(GaussRational c, int nvars);
  static Polynomial monomial(Exponents e, GaussRational c = GaussRational::one());
  /// x_var^power in nvars variables.
  static Polynomial variable_power(int nvars, int var, int power);

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::map<Exponents, GaussRational>& terms() const { return terms_; }
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Exponents& e, const GaussRational& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const GaussRational& c) const;
  Polynomial operator-() const { return *this * GaussRational(-1); }

  bool operator==(const Polynomial& o) const = default;

 private:
  std::map<Exponents, GaussRational> terms_;
};

}  // namespace crossdef
