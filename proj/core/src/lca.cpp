#include "confalg/lca.hpp"

#include <algorithm>

namespace confalg {

bool AlgebraSpec::has_family(const std::string& f) const {
  return std::find(families.begin(), families.end(), f) != families.end();
}

void AlgebraSpec::require_family(const std::string& f) const {
  if (!has_family(f)) throw UnknownFamily("family '" + f + "' is not part of algebra " + name);
}

void AlgebraSpec::require_generator(const Generator& g) const {
  require_family(g.family);
  if (indices == IndexRange::zero_only && g.index != 0) {
    throw UnknownFamily("algebra " + name + " only has index-0 generators, got " + g.to_string());
  }
}

const std::vector<BracketTerm>& AlgebraSpec::entry(const std::string& a, const std::string& b) const {
  static const std::vector<BracketTerm> kEmpty;
  auto it = table.find({a, b});
  return it == table.end() ? kEmpty : it->second;
}

void AlgebraSpec::set_bracket(const std::string& a, const std::string& b,
                              std::vector<BracketTerm> terms) {
  require_family(a);
  require_family(b);
  std::erase_if(terms, [](const BracketTerm& t) { return t.coeff.is_zero(); });
  for (const auto& t : terms) require_family(t.target);
  if (terms.empty()) {
    table.erase({a, b});
  } else {
    table[{a, b}] = std::move(terms);
  }
}

MPoly shift_outer(const MPoly& p, const MPoly& s) {
  return substitute(p, vars::d, MPoly(vars::d) + s);
}

MPoly evaluate_argument(const MPoly& p, const MPoly& s) {
  return substitute(p, vars::d, -s);
}

LambdaPoly bracket_at(const AlgebraSpec& spec, const GenTerms& x, const GenTerms& y,
                      const MPoly& spectral) {
  LambdaPoly out;
  for (const auto& [u, p] : x) {
    spec.require_generator(u);
    MPoly left = evaluate_argument(p, spectral);
    for (const auto& [v, q] : y) {
      spec.require_generator(v);
      const auto& terms = spec.entry(u.family, v.family);
      if (terms.empty()) continue;
      MPoly coeff = left * shift_outer(q, spectral);
      for (const auto& t : terms) {
        out.add(Generator{t.target, u.index + v.index},
                coeff * substitute(t.coeff, vars::lambda, spectral));
      }
    }
  }
  return out;
}

LambdaPoly bracket(const AlgebraSpec& spec, const Element& x, const Element& y) {
  return bracket_at(spec, x.terms(), y.terms(), MPoly(vars::lambda));
}

LambdaPoly check_skew(const AlgebraSpec& spec, const std::string& a, const std::string& b) {
  spec.require_family(a);
  spec.require_family(b);
  const MPoly flipped = -MPoly(vars::d) - MPoly(vars::lambda);
  LambdaPoly residual;
  for (const auto& t : spec.entry(a, b)) residual.add(Generator{t.target, 0}, t.coeff);
  for (const auto& t : spec.entry(b, a)) {
    residual.add(Generator{t.target, 0}, substitute(t.coeff, vars::lambda, flipped));
  }
  return residual;
}

LambdaPoly check_jacobi(const AlgebraSpec& spec, const std::string& a, const std::string& b,
                        const std::string& c) {
  const GenTerms ga{{Generator{a, 0}, MPoly(1)}};
  const GenTerms gb{{Generator{b, 0}, MPoly(1)}};
  const GenTerms gc{{Generator{c, 0}, MPoly(1)}};
  const MPoly l(vars::lambda);
  const MPoly m(vars::mu);

  LambdaPoly lhs = bracket_at(spec, ga, bracket_at(spec, gb, gc, m).terms(), l);
  LambdaPoly first = bracket_at(spec, bracket_at(spec, ga, gb, l).terms(), gc, l + m);
  LambdaPoly second = bracket_at(spec, gb, bracket_at(spec, ga, gc, l).terms(), m);
  return lhs - first - second;
}

bool AxiomReport::all_zero() const {
  return std::all_of(skew.begin(), skew.end(), [](const auto& r) { return r.residual.is_zero(); }) &&
         std::all_of(jacobi.begin(), jacobi.end(),
                     [](const auto& r) { return r.residual.is_zero(); });
}

AxiomReport check_all_axioms(const AlgebraSpec& spec, bool exhaustive) {
  AxiomReport report;
  const auto& fam = spec.families;
  const std::size_t n = fam.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      report.skew.push_back({fam[i], fam[j], check_skew(spec, fam[i], fam[j])});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = exhaustive ? 0 : i; j < n; ++j) {
      for (std::size_t k = exhaustive ? 0 : j; k < n; ++k) {
        report.jacobi.push_back({fam[i], fam[j], fam[k], check_jacobi(spec, fam[i], fam[j], fam[k])});
      }
    }
  }
  return report;
}

}  // namespace confalg
