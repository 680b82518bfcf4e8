#ifndef CONFALG_MPOLY_HPP
#define CONFALG_MPOLY_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "confalg/scalar.hpp"

namespace confalg {

class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A polynomial indeterminate.  The four spectral names "d" (the derivation
/// operator), "l", "m", "n" (the formal variables lambda, mu, nu) come first
/// in the variable order; every other name follows alphabetically.
class Var {
 public:
  Var() = default;
  explicit Var(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Var& a, const Var& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
  int rank_ = 4;
};

namespace vars {
inline const Var d{"d"};
inline const Var lambda{"l"};
inline const Var mu{"m"};
inline const Var nu{"n"};
}  // namespace vars

using VarSet = std::set<Var>;

/// Power product with strictly positive exponents, sorted by variable order.
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;
  Monomial(std::initializer_list<Factor> factors);
  static Monomial of(const Var& v, unsigned e = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent(const Var& v) const;

  /// Factors whose variable is (not) in `vs`.
  Monomial restricted_to(const VarSet& vs) const;
  Monomial without(const VarSet& vs) const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic order; earlier variables are more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Sparse multivariate polynomial over Gaussian rationals in canonical form:
/// no zero coefficients are stored, terms are ordered by decreasing
/// graded-lex monomial, so equality of objects is mathematical equality.
class MPoly {
 public:
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  MPoly() = default;
  MPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Var& v);  // NOLINT(google-explicit-constructor)
  MPoly(const Scalar& c, Monomial m);

  static MPoly var(const std::string& name) { return MPoly(Var(name)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws unless is_constant().
  Scalar constant_value() const;
  std::size_t size() const { return terms_.size(); }

  unsigned total_degree() const;
  unsigned degree_in(const Var& v) const;
  VarSet variables() const;
  bool involves(const Var& v) const;

  /// Leading term under the graded-lex order; requires !is_zero().
  const std::pair<const Monomial, Scalar>& leading() const { return *terms_.begin(); }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Scalar& s);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;

  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Canonical text form, e.g. "(1/2)*d + (3/2)*l - (1/2)*b".
  std::string to_string() const;
  static MPoly parse(std::string_view text);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

inline MPoly add(const MPoly& p, const MPoly& q) { return p + q; }
inline MPoly mul(const MPoly& p, const MPoly& q) { return p * q; }
inline MPoly neg(const MPoly& p) { return -p; }

/// p with v replaced by q.
MPoly substitute(const MPoly& p, const Var& v, const MPoly& q);

/// Simultaneous substitution of every variable in `map`.
MPoly substitute(const MPoly& p, const std::map<Var, MPoly>& map);

/// Full evaluation at scalar values; throws if a variable is left unassigned.
Scalar evaluate(const MPoly& p, const std::map<Var, Scalar>& values);

/// Coefficient of the monomial m (which must only involve `vs`) when p is
/// viewed as a polynomial in `vs` with coefficients in the other variables.
MPoly coeff_extract(const MPoly& p, const VarSet& vs, const Monomial& m);

/// All coefficients of p viewed as a polynomial in `vs`.
std::map<Monomial, MPoly, std::greater<>> coefficients(const MPoly& p, const VarSet& vs);

/// r with r*q == p; throws NotDivisible otherwise.  Single-divisor
/// multivariate long division under the graded-lex order.
MPoly divide_exact(const MPoly& p, const MPoly& q);

/// Quotient and remainder of p by a divisor that is monic of positive
/// degree in v; the remainder has degree < deg_v(divisor) in v.
std::pair<MPoly, MPoly> divide_monic(const MPoly& p, const MPoly& divisor, const Var& v);

}  // namespace confalg

#endif  // CONFALG_MPOLY_HPP
