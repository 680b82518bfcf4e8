#include "unknowns.hpp"

#include <algorithm>

namespace confalg::detail {

Var UnknownPool::fresh() {
  Var v(prefix_ + std::to_string(vars_.size()));
  columns_.emplace(v, vars_.size());
  vars_.push_back(v);
  return v;
}

MPoly UnknownPool::generic(const std::vector<Var>& in, unsigned degree) {
  MPoly out;
  if (in.size() == 1) {
    for (unsigned p = 0; p <= degree; ++p) out.add_term(Monomial::of(fresh()) * Monomial::of(in[0], p), 1);
    return out;
  }
  if (in.size() != 2) throw Error("UnknownPool::generic supports one or two variables");
  for (unsigned p = 0; p <= degree; ++p) {
    for (unsigned q = 0; p + q <= degree; ++q) {
      Monomial m = Monomial::of(fresh());
      if (p > 0) m = m * Monomial::of(in[0], p);
      if (q > 0) m = m * Monomial::of(in[1], q);
      out.add_term(m, 1);
    }
  }
  return out;
}

void add_coefficient_rows(SparseEliminator& elim, const MPoly& expr, const VarSet& vs,
                          const std::map<Var, std::size_t>& columns) {
  for (auto& eq : coefficient_equations(expr, vs, columns)) elim.add(std::move(eq.row), std::move(eq.rhs));
}

MPoly instantiate(const MPoly& p, const std::vector<Var>& vars, const ScalarVector& values) {
  std::map<Var, MPoly> map;
  for (std::size_t k = 0; k < vars.size(); ++k) map.emplace(vars[k], MPoly(values[k]));
  return substitute(p, map);
}

namespace {

bool involves_any(const MPoly& p, const std::vector<Var>& vs) {
  return std::any_of(vs.begin(), vs.end(), [&](const Var& v) { return p.involves(v); });
}

}  // namespace

PropagationResult propagate(std::vector<MPoly> equations, const std::vector<Var>& unknowns) {
  PropagationResult out;
  std::vector<Var> open = unknowns;
  auto apply = [&](const std::map<Var, MPoly>& step) {
    for (auto& [v, expr] : out.assignment) expr = substitute(expr, step);
    for (const auto& [v, expr] : step) out.assignment[v] = expr;
    for (auto& eq : equations) eq = substitute(eq, step);
    std::erase_if(open, [&](const Var& v) { return step.count(v) > 0; });
  };

  while (true) {
    std::erase_if(equations, [](const MPoly& e) { return e.is_zero(); });
    if (equations.empty()) break;

    std::vector<MPoly> rest;
    std::vector<LinearEquation> linear;
    std::map<Var, std::size_t> columns;
    for (std::size_t k = 0; k < open.size(); ++k) columns.emplace(open[k], k);
    for (const auto& eq : equations) {
      if (!involves_any(eq, open)) {
        if (eq.is_constant()) {
          out.consistent = false;
          return out;
        }
        rest.push_back(eq);
        continue;
      }
      try {
        linear.push_back(linear_equation(eq, columns));
      } catch (const Error&) {
        rest.push_back(eq);
      }
    }

    if (!linear.empty()) {
      SparseEliminator elim(open.size());
      for (auto& eq : linear) elim.add(std::move(eq.row), std::move(eq.rhs));
      if (elim.inconsistent() && elim.conflict().is_constant()) {
        out.consistent = false;
        return out;
      }
      LinearSolution sol;
      try {
        sol = elim.solve();
      } catch (const Inconsistent&) {
        out.unresolved = equations;
        break;
      }
      std::vector<bool> is_free(open.size(), false);
      std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_pivot;
      for (const auto& kv : sol.kernel_basis) {
        // The free column of a kernel vector is its last nonzero entry.
        std::size_t f = kv.size() - 1;
        while (kv[f].is_zero()) --f;
        is_free[f] = true;
        for (std::size_t p = 0; p < open.size(); ++p) {
          if (p != f && !kv[p].is_zero()) by_pivot[p].emplace_back(f, kv[p]);
        }
      }
      std::map<Var, MPoly> step;
      for (std::size_t p = 0; p < open.size(); ++p) {
        if (is_free[p]) continue;
        MPoly value = sol.solution[p];
        for (const auto& [f, coeff] : by_pivot[p]) value += MPoly(coeff) * MPoly(open[f]);
        step.emplace(open[p], value);
      }
      apply(step);
      continue;
    }

    // No linear equation left: look for c * u^e = 0.
    bool progressed = false;
    for (const auto& eq : rest) {
      if (eq.size() != 1) continue;
      const Monomial& m = eq.leading().first;
      std::vector<Var> hits;
      for (const auto& [v, e] : m.factors()) {
        if (std::find(open.begin(), open.end(), v) != open.end()) hits.push_back(v);
      }
      if (hits.size() == 1 && m.without({hits[0]}).is_one()) {
        apply({{hits[0], MPoly()}});
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      out.unresolved = rest;
      break;
    }
  }
  out.free = open;
  return out;
}

}  // namespace confalg::detail
