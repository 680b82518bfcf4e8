#include "confalg/scalar.hpp"

#include <cctype>
#include <functional>
#include <ostream>

namespace confalg {

namespace {

std::string rational_text(const Rational& q) {
  return q.get_str();
}

// One signed real or imaginary part of a literal, e.g. "-3/4" or "+2i".
struct Part {
  Rational value;
  bool imaginary = false;
};

bool read_part(std::string_view text, std::size_t& pos, Part& out) {
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
    ++pos;
  }
  std::string digits(text.substr(start, pos - start));
  bool imaginary = pos < text.size() && text[pos] == 'i';
  if (imaginary) ++pos;
  if (digits.empty() && !imaginary) return false;
  Rational value(1);
  if (!digits.empty()) {
    if (digits.front() == '/' || digits.back() == '/' ||
        digits.find('/') != digits.rfind('/')) {
      return false;
    }
    try {
      value = Rational(digits);
    } catch (const std::invalid_argument&) {
      return false;
    }
    if (value.get_den() == 0) return false;
    value.canonicalize();
  }
  out.value = sign * value;
  out.imaginary = imaginary;
  return true;
}

}  // namespace

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw Error("Scalar::fraction: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw ParseError("empty scalar literal");
  std::size_t pos = 0;
  Scalar result;
  bool seen_re = false;
  bool seen_im = false;
  while (pos < compact.size()) {
    Part part;
    if (!read_part(compact, pos, part)) {
      throw ParseError("malformed scalar literal '" + compact + "'");
    }
    bool& seen = part.imaginary ? seen_im : seen_re;
    if (seen) throw ParseError("malformed scalar literal '" + compact + "'");
    seen = true;
    if (part.imaginary) {
      result.im_ = part.value;
    } else {
      result.re_ = part.value;
    }
  }
  return result;
}

bool Scalar::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  return Scalar(-re_, -im_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  if (sgn(im_) == 0) return Scalar(1 / re_);
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return rational_text(re_);
  std::string im_text;
  if (im_ == 1) {
    im_text = "i";
  } else if (im_ == -1) {
    im_text = "-i";
  } else {
    im_text = rational_text(im_) + "i";
  }
  if (sgn(re_) == 0) return im_text;
  std::string out = rational_text(re_);
  if (sgn(im_) > 0) out += "+";
  return out + im_text;
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31 + h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace confalg
