#include "confalg/catalog.hpp"

#include <algorithm>

namespace confalg {

namespace {

const MPoly kD(vars::d);
const MPoly kL(vars::lambda);

}  // namespace

AlgebraSpec build_construction(const MPoly& a, const MPoly& a_prime, const MPoly& b,
                               const MPoly& b_prime) {
  AlgebraSpec spec;
  spec.name = "mfam";
  spec.families = {"L", "M", "Y"};
  spec.set_bracket("L", "L", {{"L", kD + 2 * kL}});
  spec.set_bracket("L", "M", {{"M", kD + a * kL + b}});
  spec.set_bracket("M", "L", {{"M", (a - 1) * kD + a * kL - b}});
  spec.set_bracket("L", "Y", {{"Y", kD + a_prime * kL + b_prime}});
  spec.set_bracket("Y", "L", {{"Y", (a_prime - 1) * kD + a_prime * kL - b_prime}});
  spec.set_bracket("Y", "Y", {{"M", kD + 2 * kL}});
  return spec;
}

AlgebraSpec build_csv(const MPoly& a, const MPoly& b) {
  AlgebraSpec spec = build_construction(a, a * Scalar::fraction(1, 2) + 1, b, b * Scalar::fraction(1, 2));
  spec.name = "csv";
  return spec;
}

AlgebraSpec restrict_algebra(const AlgebraSpec& parent, const std::vector<std::string>& families,
                             std::optional<IndexRange> indices, std::string name) {
  AlgebraSpec out;
  out.name = name.empty() ? parent.name + "-restricted" : std::move(name);
  for (const auto& f : parent.families) {
    if (std::find(families.begin(), families.end(), f) != families.end()) out.families.push_back(f);
  }
  for (const auto& f : families) parent.require_family(f);
  out.indices = indices.value_or(parent.indices);
  for (const auto& [pair, terms] : parent.table) {
    if (!out.has_family(pair.first) || !out.has_family(pair.second)) continue;
    std::vector<BracketTerm> kept;
    for (const auto& t : terms) {
      if (out.has_family(t.target)) kept.push_back(t);
    }
    out.set_bracket(pair.first, pair.second, std::move(kept));
  }
  return out;
}

AlgebraSpec build_chv(const MPoly& a, const MPoly& b) {
  return restrict_algebra(build_csv(a, b), {"L", "M"}, std::nullopt, "chv");
}

AlgebraSpec build_cw() {
  return restrict_algebra(build_csv(0, 0), {"L"}, std::nullopt, "cw");
}

AlgebraSpec build_sv(const MPoly& a, const MPoly& b) {
  return restrict_algebra(build_csv(a, b), {"L", "M", "Y"}, IndexRange::zero_only, "sv");
}

AlgebraSpec build_hv(const MPoly& a, const MPoly& b) {
  return restrict_algebra(build_csv(a, b), {"L", "M"}, IndexRange::zero_only, "hv");
}

AlgebraSpec build_cvir() {
  return restrict_algebra(build_csv(0, 0), {"L"}, IndexRange::zero_only, "cvir");
}

bool subalgebra_check(const AlgebraSpec& parent, const AlgebraSpec& sub) {
  for (const auto& f : sub.families) {
    if (!parent.has_family(f)) return false;
  }
  if (parent.indices == IndexRange::zero_only && sub.indices == IndexRange::all_integers) {
    return false;
  }
  for (const auto& a : sub.families) {
    for (const auto& b : sub.families) {
      const auto& mine = sub.entry(a, b);
      const auto& theirs = parent.entry(a, b);
      if (!(mine == theirs)) return false;
      for (const auto& t : theirs) {
        if (!sub.has_family(t.target)) return false;
      }
    }
  }
  return true;
}

AlgebraSpec build_named(const std::string& id, const MPoly& a, const MPoly& b,
                        const MPoly& a_prime, const MPoly& b_prime) {
  if (id == "csv") return build_csv(a, b);
  if (id == "chv") return build_chv(a, b);
  if (id == "cw") return build_cw();
  if (id == "sv") return build_sv(a, b);
  if (id == "hv") return build_hv(a, b);
  if (id == "cvir") return build_cvir();
  if (id == "mfam") return build_construction(a, a_prime, b, b_prime);
  throw Error("unknown algebra id '" + id + "'");
}

ConstructionSolution solve_construction(const std::vector<Monomial>* only) {
  AlgebraSpec family = build_construction(MPoly(params::a), MPoly(params::a_prime), MPoly(params::b),
                                          MPoly(params::b_prime));
  LambdaPoly residual = check_jacobi(family, "L", "Y", "Y");

  ConstructionSolution out;
  const VarSet spectral{vars::d, vars::lambda, vars::mu};
  for (const auto& [g, poly] : residual.terms()) {
    for (const auto& [m, coeff] : coefficients(poly, spectral)) {
      out.equations.push_back({m, coeff});
    }
  }

  const std::map<Var, std::size_t> unknowns{{params::a_prime, 0}, {params::b_prime, 1}};
  ScalarMatrix matrix;
  std::vector<MPoly> rhs;
  for (const auto& eq : out.equations) {
    if (only != nullptr && std::find(only->begin(), only->end(), eq.monomial) == only->end()) continue;
    LinearEquation lin = linear_equation(eq.coefficient, unknowns);
    ScalarVector row(2);
    for (const auto& [col, value] : lin.row) row[col] = value;
    matrix.push_back(std::move(row));
    rhs.push_back(lin.rhs);
  }
  out.equations_used = matrix.size();
  LinearSolution sol = linear_solve(matrix, rhs);
  if (!sol.kernel_basis.empty()) {
    throw Error("solve_construction: the selected equations do not determine (a', b') uniquely");
  }
  out.a_prime = sol.solution[0];
  out.b_prime = sol.solution[1];
  return out;
}

}  // namespace confalg
