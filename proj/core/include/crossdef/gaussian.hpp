#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace crossdef {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Order of the cyclotomic field the coefficient ring lives in.  The
/// current scalar type realizes order 4, i.e. Q(i); orders 1 and 2 embed
/// into it.  Anything larger would need a new scalar backend.
inline constexpr int kCyclotomicOrder = 4;

/// An element a + b*i of the Gaussian rationals Q(i).
///
/// Both parts are exact arbitrary-precision rationals kept in lowest terms
/// with positive denominator (cpp_rational canonicalizes on construction),
/// so equality of values is equality of representations.  Values are
/// immutable in spirit: all arithmetic returns new objects.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational zero() { return {}; }
  static GaussRational one() { return {1}; }
  static GaussRational imag_unit() { return {Rational(0), Rational(1)}; }

  /// i^k for any integer k (k is reduced mod 4).
  static GaussRational root_of_unity_pow(long k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |z|^2 = z * conj(z), a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational operator+(const GaussRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
  GaussRational operator-(const GaussRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
  GaussRational operator*(const GaussRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }

  /// Multiplicative inverse.  Throws std::domain_error on zero.
  GaussRational inv() const;
  GaussRational operator/(const GaussRational& o) const { return *this * o.inv(); }

  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

  bool operator==(const GaussRational& o) const = default;

  /// Renders "a/b + c/d*i" with zero parts omitted ("0" for zero).
  std::string str() const;

  /// Parses the grammar produced by str(); also accepts forms like
  /// "2+1i", "-i", "3/2*i".  Throws std::invalid_argument on bad input.
  static GaussRational parse(const std::string& text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& g);

inline GaussRational operator*(long a, const GaussRational& b) { return GaussRational(a) * b; }

}  // namespace crossdef
