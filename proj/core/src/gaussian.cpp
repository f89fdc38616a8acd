#include "crossdef/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crossdef {

GaussRational GaussRational::root_of_unity_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return one();
    case 1: return imag_unit();
    case 2: return {-1};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussRational GaussRational::inv() const {
  if (is_zero()) throw std::domain_error("GaussRational: division by zero");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

std::string GaussRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out = rational_str(re_);
  if (im_ != 0) {
    Rational a = im_ < 0 ? Rational(-im_) : im_;
    std::string part = (a == 1) ? "i" : rational_str(a) + "*i";
    if (out.empty()) {
      out = (im_ < 0 ? "-" : "") + part;
    } else {
      out += (im_ < 0 ? " - " : " + ") + part;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) { return os << g.str(); }

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what +
                                " in \"" + s + "\"");
  }
};

Integer parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected digits");
  return Integer(c.s.substr(start, c.pos - start));
}

// term := ["i"] | number ["/" number] ["*"? "i"]
// gauss := ["+"|"-"] term { ("+"|"-") term }
GaussRational parse_gauss_body(Cursor& c) {
  GaussRational total = GaussRational::zero();
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.eof()) {
      if (first) c.fail("empty scalar");
      break;
    }
    int sign = 1;
    if (c.consume('-')) {
      sign = -1;
    } else if (!c.consume('+') && !first) {
      break;  // something that is not a continuation; caller handles it
    }
    c.skip_ws();
    Rational mag;
    bool imaginary = false;
    if (c.peek() == 'i') {
      ++c.pos;
      mag = 1;
      imaginary = true;
    } else {
      Integer num = parse_integer(c);
      Integer den = 1;
      if (c.consume('/')) den = parse_integer(c);
      if (den == 0) c.fail("zero denominator");
      mag = Rational(num, den);
      size_t save = c.pos;
      bool star = c.consume('*');
      if (c.peek() == 'i') {
        ++c.pos;
        imaginary = true;
      } else if (star) {
        c.pos = save;  // a '*' that belongs to an enclosing term grammar
      }
    }
    if (sign < 0) mag = -mag;
    total += imaginary ? GaussRational(Rational(0), mag) : GaussRational(mag);
    first = false;
  }
  return total;
}

}  // namespace

GaussRational GaussRational::parse(const std::string& text) {
  Cursor c{text};
  GaussRational g;
  if (c.consume('(')) {
    g = parse_gauss_body(c);
    if (!c.consume(')')) c.fail("expected ')'");
  } else {
    g = parse_gauss_body(c);
  }
  if (!c.eof()) c.fail("trailing input");
  return g;
}

}  // namespace crossdef
