#include "confalg/random.hpp"

#include <algorithm>

namespace confalg {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int bound) {
  Rational r(uniform(rng, -bound, bound), uniform(rng, 1, bound));
  r.canonicalize();
  return r;
}

}  // namespace

Scalar random_scalar(Rng& rng, int bound, bool gaussian) {
  Rational re = random_rational(rng, bound);
  Rational im = gaussian ? random_rational(rng, bound) : Rational(0);
  return Scalar(re, im);
}

Scalar random_nonzero_scalar(Rng& rng, int bound, bool gaussian) {
  for (;;) {
    Scalar s = random_scalar(rng, bound, gaussian);
    if (!s.is_zero()) return s;
  }
}

MPoly random_poly(Rng& rng, const std::vector<Var>& vars, unsigned max_degree, unsigned max_terms,
                  int coeff_bound) {
  MPoly out;
  const int terms = uniform(rng, 0, static_cast<int>(max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    unsigned budget = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree)));
    while (budget > 0 && !vars.empty()) {
      const Var& v = vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
      const unsigned e = static_cast<unsigned>(uniform(rng, 1, static_cast<int>(budget)));
      m = m * Monomial::of(v, e);
      budget -= e;
    }
    out.add_term(m, random_scalar(rng, coeff_bound));
  }
  return out;
}

MPoly random_nonzero_poly(Rng& rng, const std::vector<Var>& vars, unsigned max_degree, unsigned max_terms,
                          int coeff_bound) {
  for (;;) {
    MPoly p = random_poly(rng, vars, max_degree, std::max(max_terms, 1u), coeff_bound);
    if (!p.is_zero()) return p;
  }
}

Element random_element(Rng& rng, const std::vector<std::string>& families, int index, unsigned max_degree) {
  Element out;
  for (const auto& f : families) {
    if (uniform(rng, 0, 2) == 0) continue;
    out.add(Generator{f, index}, random_poly(rng, {vars::d}, max_degree, max_degree + 1));
  }
  return out;
}

Element random_element(Rng& rng, const std::vector<std::string>& families, int lo, int hi,
                       unsigned max_degree, unsigned max_terms) {
  Element out;
  const int terms = uniform(rng, 1, static_cast<int>(std::max(max_terms, 1u)));
  for (int t = 0; t < terms; ++t) {
    const auto& f = families[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(families.size()) - 1))];
    out.add(Generator{f, uniform(rng, lo, hi)}, random_poly(rng, {vars::d}, max_degree, max_degree + 1));
  }
  return out;
}

}  // namespace confalg
