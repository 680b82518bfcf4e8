#ifndef CONFALG_SCALAR_HPP
#define CONFALG_SCALAR_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace confalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

/// Exact Gaussian rational re + im*i.  Both parts are kept in lowest terms
/// with a positive denominator (GMP canonicalizes after every operation).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational re, Rational im = 0);

  /// p/q with q != 0.
  static Scalar fraction(long p, long q);
  static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

  /// Parses "p", "p/q", "p/q+r/si", "r/si", "-i" and similar literals.
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  Scalar inverse() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first); only used for deterministic containers.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Compact literal form accepted by parse(): "3", "-1/2", "1/2+3/4i".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace confalg

#endif  // CONFALG_SCALAR_HPP
