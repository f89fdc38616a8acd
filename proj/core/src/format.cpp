#include "crossdef/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace crossdef {

namespace {

// Renders coeff * mono * [sigma]; the coefficient is inlined when it is a
// single signed rational/imaginary term and parenthesized otherwise.
void append_term(std::ostringstream& os, bool first, const GaussRational& c,
                 const Exponents& mono, int sigma, const GroupData& data) {
  std::vector<std::string> factors;
  for (size_t v = 0; v < mono.size(); ++v) {
    if (mono[v] == 0) continue;
    std::string f = data.variable_names[v];
    if (mono[v] != 1) f += "^" + std::to_string(mono[v]);
    factors.push_back(f);
  }
  if (sigma != AbelianGroup::identity()) factors.push_back("[" + data.element_names[sigma] + "]");

  GaussRational mag = c;
  bool negative = false;
  if (c.im() == 0 && c.re() < 0) {
    negative = true;
    mag = -c;
  } else if (c.re() == 0 && c.im() < 0) {
    negative = true;
    mag = -c;
  }
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }

  std::string coeff_str;
  bool mixed = mag.re() != 0 && mag.im() != 0;
  if (mixed) {
    coeff_str = "(" + mag.str() + ")";
  } else if (!mag.is_one()) {
    coeff_str = mag.str();
  }
  if (coeff_str.empty() && factors.empty()) {
    os << "1";
    return;
  }
  bool need_star = false;
  if (!coeff_str.empty()) {
    os << coeff_str;
    need_star = true;
  }
  for (const auto& f : factors) {
    if (need_star) os << "*";
    os << f;
    need_star = true;
  }
}

}  // namespace

std::string format(const CrossedElement& e, const GroupData& data) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    append_term(os, first, c, k.mono, k.sigma, data);
    first = false;
  }
  return os.str();
}

std::string format(const Polynomial& p, const GroupData& data) {
  return format(CrossedElement::from_polynomial(p), data);
}

std::string format(const TElement& e, const GroupData& data) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, coeff] : e.coeffs()) {
    std::string body = format(coeff, data);
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << body;
      continue;
    }
    std::string tpow = d == 1 ? "t" : "t^" + std::to_string(d);
    if (coeff.nterms() > 1) {
      os << tpow << "*(" << body << ")";
    } else {
      os << tpow << "*" << body;
    }
  }
  return os.str();
}

namespace {

struct TermCursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == ','))
      ++pos;
    return s.substr(start, pos - start);
  }

  long integer() {
    skip_ws();
    bool neg = consume('-');
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    long v = std::stol(s.substr(start, pos - start));
    return neg ? -v : v;
  }

  Rational rational() {
    Integer num(std::to_string(integer()));
    if (consume('/')) {
      Integer den(std::to_string(integer()));
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }
};

int variable_index(const GroupData& data, const std::string& name) {
  for (size_t v = 0; v < data.variable_names.size(); ++v)
    if (data.variable_names[v] == name) return static_cast<int>(v);
  return -1;
}

// One product term: optional coefficient, variable powers, optional group
// bracket.  Leading sign handled by the caller.
void parse_term(TermCursor& c, const GroupData& data, GaussRational sign_coeff,
                CrossedElement& out) {
  GaussRational coeff = sign_coeff;
  Exponents mono(data.variable_names.size(), 0);
  int sigma = AbelianGroup::identity();
  bool saw_anything = false;
  bool saw_sigma = false;

  bool expects_factor = true;
  while (expects_factor) {
    c.skip_ws();
    char ch = c.peek();
    if (ch == '(') {
      ++c.pos;
      size_t depth_start = c.pos;
      size_t depth = 1;
      while (c.pos < c.s.size() && depth > 0) {
        if (c.s[c.pos] == '(') ++depth;
        if (c.s[c.pos] == ')') --depth;
        ++c.pos;
      }
      if (depth != 0) c.fail("unbalanced parenthesis");
      coeff *= GaussRational::parse(c.s.substr(depth_start, c.pos - 1 - depth_start));
      saw_anything = true;
    } else if (ch == '[') {
      if (saw_sigma) c.fail("a term carries at most one group symbol");
      ++c.pos;
      std::string name = c.word();
      if (!c.consume(']')) c.fail("expected ']'");
      int idx = data.element_by_name(name);
      if (idx < 0) c.fail("unknown group element '" + name + "'");
      sigma = idx;
      saw_sigma = true;
      saw_anything = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational r = c.rational();
      // "2i" / "2*i" style imaginary part of an unparenthesized coefficient.
      size_t save = c.pos;
      bool star = c.consume('*');
      if (c.peek() == 'i' && variable_index(data, "i") < 0) {
        ++c.pos;
        coeff *= GaussRational(Rational(0), r);
      } else {
        if (star) c.pos = save;
        coeff *= GaussRational(r);
      }
      saw_anything = true;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name = c.word();
      int v = variable_index(data, name);
      if (v < 0) {
        if (name == "i") {
          coeff *= GaussRational::imag_unit();
          saw_anything = true;
        } else {
          c.fail("unknown variable '" + name + "'");
        }
      } else {
        int power = 1;
        if (c.consume('^')) power = static_cast<int>(c.integer());
        if (power < 0) c.fail("negative exponent");
        mono[v] += power;
        saw_anything = true;
      }
    } else {
      c.fail("expected a term");
    }
    expects_factor = c.consume('*');
  }
  if (!saw_anything) c.fail("empty term");
  out.add_term({mono, sigma}, coeff);
}

}  // namespace

CrossedElement parse_crossed(const std::string& text, const GroupData& data) {
  TermCursor c{text};
  CrossedElement out;
  bool first = true;
  while (true) {
    c.skip_ws();
    if (c.pos >= c.s.size()) {
      if (first) c.fail("empty element");
      break;
    }
    GaussRational sign = GaussRational::one();
    if (c.consume('-')) {
      sign = GaussRational(-1);
    } else if (!c.consume('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    parse_term(c, data, sign, out);
    first = false;
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text, const GroupData& data) {
  CrossedElement e = parse_crossed(text, data);
  Polynomial p;
  for (const auto& [k, c] : e.terms()) {
    if (k.sigma != AbelianGroup::identity())
      throw std::invalid_argument("group element not allowed in a polynomial: " + text);
    p.add_term(k.mono, c);
  }
  return p;
}

}  // namespace crossdef
