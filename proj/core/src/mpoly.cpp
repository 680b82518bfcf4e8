#include "confalg/mpoly.hpp"

#include <algorithm>
#include <ostream>

namespace confalg {

namespace {

int spectral_rank(const std::string& name) {
  if (name == "d") return 0;
  if (name == "l") return 1;
  if (name == "m") return 2;
  if (name == "n") return 3;
  return 4;
}

}  // namespace

Var::Var(std::string name) : name_(std::move(name)), rank_(spectral_rank(name_)) {
  if (name_.empty()) throw Error("empty variable name");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Factor> factors) {
  for (const auto& f : factors) *this = *this * of(f.first, f.second);
}

Monomial Monomial::of(const Var& v, unsigned e) {
  Monomial m;
  if (e > 0) m.factors_.emplace_back(v, e);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(const Var& v) const {
  for (const auto& f : factors_) {
    if (f.first == v) return f.second;
  }
  return 0;
}

Monomial Monomial::restricted_to(const VarSet& vs) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (vs.count(f.first)) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::without(const VarSet& vs) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (!vs.count(f.first)) out.factors_.push_back(f);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& f : factors_) {
    if (other.exponent(f.first) < f.second) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& f : other.factors_) {
    unsigned mine = exponent(f.first);
    if (f.second > mine) out.factors_.emplace_back(f.first, f.second - mine);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first == ib->first) {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else {
      out.factors_.push_back(*ib++);
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) {
      // The monomial carrying the earlier variable is larger.
      return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  if (ia != a.factors_.end()) return std::strong_ordering::greater;
  if (ib != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MPoly::MPoly(const Var& v) {
  terms_.emplace(Monomial::of(v), Scalar(1));
}

MPoly::MPoly(const Scalar& c, Monomial m) {
  if (!c.is_zero()) terms_.emplace(std::move(m), c);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar MPoly::constant_value() const {
  if (!is_constant()) throw Error("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned MPoly::degree_in(const Var& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

VarSet MPoly::variables() const {
  VarSet out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

bool MPoly::involves(const Var& v) const {
  return degree_in(v) > 0;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) {
  return os << p.to_string();
}

// -------------------------------------------------------------- algorithms

MPoly substitute(const MPoly& p, const Var& v, const MPoly& q) {
  return substitute(p, std::map<Var, MPoly>{{v, q}});
}

MPoly substitute(const MPoly& p, const std::map<Var, MPoly>& map) {
  // Powers of each replacement are cached; exponents are small in practice.
  std::map<Var, std::vector<MPoly>> powers;
  auto power_of = [&](const Var& v, unsigned e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * map.at(v));
    return cache[e];
  };
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    MPoly factor(c);
    for (const auto& [v, e] : m.factors()) {
      if (map.count(v)) {
        factor = factor * power_of(v, e);
      } else {
        kept = kept * Monomial::of(v, e);
      }
    }
    if (kept.is_one()) {
      out += factor;
    } else {
      for (const auto& [fm, fc] : factor.terms()) out.add_term(fm * kept, fc);
    }
  }
  return out;
}

Scalar evaluate(const MPoly& p, const std::map<Var, Scalar>& values) {
  Scalar total;
  for (const auto& [m, c] : p.terms()) {
    Scalar term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw Error("evaluate: no value for variable " + v.name());
      term *= it->second.pow(e);
    }
    total += term;
  }
  return total;
}

MPoly coeff_extract(const MPoly& p, const VarSet& vs, const Monomial& m) {
  for (const auto& f : m.factors()) {
    if (!vs.count(f.first)) {
      throw Error("coeff_extract: monomial " + m.to_string() + " uses a variable outside the set");
    }
  }
  MPoly out;
  for (const auto& [tm, c] : p.terms()) {
    if (tm.restricted_to(vs) == m) out.add_term(tm.without(vs), c);
  }
  return out;
}

std::map<Monomial, MPoly, std::greater<>> coefficients(const MPoly& p, const VarSet& vs) {
  std::map<Monomial, MPoly, std::greater<>> out;
  for (const auto& [tm, c] : p.terms()) out[tm.restricted_to(vs)].add_term(tm.without(vs), c);
  return out;
}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw Error("divide_exact: division by the zero polynomial");
  const auto& [lm, lc] = q.leading();
  Scalar inv = lc.inverse();
  MPoly rest = p;
  MPoly quotient;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading();
    if (!lm.divides(rm)) {
      throw NotDivisible("divide_exact: " + q.to_string() + " does not divide " + p.to_string());
    }
    MPoly step(rc * inv, lm.quotient_of(rm));
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

std::pair<MPoly, MPoly> divide_monic(const MPoly& p, const MPoly& divisor, const Var& v) {
  unsigned n = divisor.degree_in(v);
  if (n == 0) throw Error("divide_monic: divisor has degree 0 in " + v.name());
  VarSet just_v{v};
  auto div_coeffs = coefficients(divisor, just_v);
  if (!(div_coeffs.at(Monomial::of(v, n)) == MPoly(1))) {
    throw Error("divide_monic: divisor is not monic in " + v.name());
  }
  MPoly quotient;
  MPoly rest = p;
  for (;;) {
    unsigned k = rest.degree_in(v);
    if (rest.is_zero() || k < n) break;
    MPoly top = coeff_extract(rest, just_v, Monomial::of(v, k));
    MPoly step = top * MPoly(Scalar(1), Monomial::of(v, k - n));
    quotient += step;
    rest -= step * divisor;
  }
  return {quotient, rest};
}

}  // namespace confalg
