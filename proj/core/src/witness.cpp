#include <algorithm>

#include "confalg/classify.hpp"
#include "unknowns.hpp"

namespace confalg {

namespace {

bool is_numeric_action(const MPoly& p) {
  for (const auto& v : p.variables()) {
    if (!(v == vars::d) && !(v == vars::lambda)) return false;
  }
  return true;
}

}  // namespace

WitnessResult reducibility_witness(const ModuleSpec& module, unsigned max_degree) {
  if (module.graded) throw Error("reducibility_witness: expects a rank-one module");
  for (const auto& [key, poly] : module.table) {
    if (!is_numeric_action(poly)) {
      throw Error("reducibility_witness: action " + std::get<0>(key) + "_" + std::to_string(std::get<1>(key)) +
                  " is not numeric: " + poly.to_string());
    }
  }
  WitnessResult out;
  const bool has_nonzero_index = module.generators.lo < 0 || module.generators.hi > 0;
  const bool only_index_zero = std::all_of(module.table.begin(), module.table.end(),
                                           [](const auto& kv) { return std::get<1>(kv.first) == 0; });
  if (has_nonzero_index && only_index_zero) {
    out.trivial_module = true;
    out.notes.push_back("every action with nonzero generator index vanishes; module flagged as trivial");
    return out;
  }

  const MPoly d(vars::d);
  const MPoly l(vars::lambda);
  const VarSet spectral{vars::d, vars::lambda};
  for (unsigned t = 1; t <= max_degree; ++t) {
    out.searched_degree = t;
    detail::UnknownPool pool("w");
    MPoly q(1, Monomial::of(vars::d, t));
    for (unsigned s = 0; s < t; ++s) q += MPoly(pool.fresh()) * MPoly(1, Monomial::of(vars::d, s));

    // q(d) v spans a submodule iff q(d) divides q(d + l) f(d, l) for every action f.
    const MPoly shifted = substitute(q, vars::d, d + l);
    std::vector<MPoly> equations;
    for (const auto& [key, f] : module.table) {
      const MPoly remainder = divide_monic(shifted * f, q, vars::d).second;
      for (auto& [m, c] : coefficients(remainder, spectral)) {
        if (!c.is_zero()) equations.push_back(std::move(c));
      }
    }
    const detail::PropagationResult prop = detail::propagate(equations, pool.vars());
    if (!prop.consistent) continue;
    if (!prop.unresolved.empty()) {
      out.notes.push_back("degree " + std::to_string(t) + ": residual system is not reducible by elimination");
      continue;
    }
    std::map<Var, MPoly> choice;
    for (const auto& v : prop.free) choice.emplace(v, MPoly());
    std::map<Var, MPoly> values;
    for (const auto& v : pool.vars()) {
      auto it = prop.assignment.find(v);
      values.emplace(v, it == prop.assignment.end() ? MPoly() : substitute(it->second, choice));
    }
    const MPoly candidate = substitute(q, values);
    bool verified = true;
    const MPoly candidate_shifted = substitute(candidate, vars::d, d + l);
    for (const auto& [key, f] : module.table) {
      try {
        divide_exact(candidate_shifted * f, candidate);
      } catch (const NotDivisible&) {
        verified = false;
      }
    }
    if (!verified) {
      out.notes.push_back("degree " + std::to_string(t) + ": candidate " + candidate.to_string() +
                          " failed the division check");
      continue;
    }
    if (!prop.free.empty()) {
      out.notes.push_back("degree " + std::to_string(t) + ": " + std::to_string(prop.free.size()) +
                          " free coefficients set to 0");
    }
    out.witness = candidate;
    return out;
  }
  return out;
}

}  // namespace confalg
