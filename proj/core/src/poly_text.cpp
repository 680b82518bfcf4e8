// Text form of MPoly: printer and a small recursive-descent parser.
//
// Grammar accepted by the parser (whitespace is ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | 'i' | '(' expr ')'
// Division is only allowed by a nonzero constant.  The UTF-8 symbols for
// partial, lambda, mu and nu are accepted as aliases of d, l, m and n.

#include <cctype>
#include <string>

#include "confalg/mpoly.hpp"

namespace confalg {

namespace {

std::string rational_coeff(const Rational& r) {
  if (r.get_den() == 1) return r.get_str();
  return "(" + r.get_str() + ")";
}

// Renders a coefficient magnitude that multiplies a monomial (or stands alone).
std::string coefficient_text(const Scalar& c) {
  if (c.is_real()) return rational_coeff(c.re());
  if (sgn(c.re()) == 0) {
    if (c.im() == 1) return "i";
    return rational_coeff(c.im()) + "*i";
  }
  std::string out = "(" + c.re().get_str();
  if (sgn(c.im()) > 0) out += "+";
  if (c.im() == 1) {
    out += "i";
  } else if (c.im() == -1) {
    out += "-i";
  } else {
    out += c.im().get_str() + "*i";
  }
  return out + ")";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_utf8(std::string_view seq) {
    skip_space();
    if (text_.substr(pos_, seq.size()) == seq) {
      pos_ += seq.size();
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        MPoly divisor = unary();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        acc *= divisor.constant_value().inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept_utf8("∂")) return MPoly(vars::d);
    if (accept_utf8("λ")) return MPoly(vars::lambda);
    if (accept_utf8("μ")) return MPoly(vars::mu);
    if (accept_utf8("ν")) return MPoly(vars::nu);
    char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Scalar(Rational(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return MPoly(Scalar::imaginary_unit());
      return MPoly(Var(name));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Split off an overall sign for real and purely imaginary coefficients.
    bool negative = false;
    Scalar magnitude = c;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      magnitude = -c;
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      magnitude = -c;
    }
    std::string body;
    if (m.is_one()) {
      body = coefficient_text(magnitude);
    } else if (magnitude.is_one()) {
      body = m.to_string();
    } else {
      body = coefficient_text(magnitude) + "*" + m.to_string();
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

MPoly MPoly::parse(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace confalg
