#include "confalg/linsolve.hpp"

namespace confalg {

void SparseEliminator::reduce_in_place(SparseRow& row, MPoly& rhs, bool track_rhs) const {
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Scalar factor = it->second;
    for (const auto& [c, v] : p->second.row) {
      auto [slot, inserted] = row.try_emplace(c, -(factor * v));
      if (!inserted) {
        slot->second -= factor * v;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
    if (track_rhs && !p->second.rhs.is_zero()) rhs -= factor * p->second.rhs;
    it = row.upper_bound(col);
  }
}

bool SparseEliminator::add(SparseRow row, MPoly rhs) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= n_) throw Error("SparseEliminator: column out of range");
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  reduce_in_place(row, rhs, true);
  if (row.empty()) {
    if (!rhs.is_zero() && conflict_.is_zero()) conflict_ = rhs;
    return false;
  }
  const Scalar inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  rhs *= inv;
  const std::size_t col = row.begin()->first;
  pivots_.emplace(col, Pivot{std::move(row), std::move(rhs)});
  return true;
}

SparseRow SparseEliminator::reduce(SparseRow row) const {
  MPoly unused;
  reduce_in_place(row, unused, false);
  return row;
}

LinearSolution SparseEliminator::solve() const {
  if (inconsistent()) {
    throw Inconsistent("linear system is inconsistent: a dependent equation reduces to 0 = " +
                       conflict_.to_string());
  }
  // Back substitution from the highest pivot down gives the reduced form.
  std::map<std::size_t, Pivot> reduced;
  for (auto p = pivots_.rbegin(); p != pivots_.rend(); ++p) {
    Pivot row = p->second;
    auto it = row.row.upper_bound(p->first);
    while (it != row.row.end()) {
      auto q = reduced.find(it->first);
      if (q == reduced.end()) {
        ++it;
        continue;
      }
      const std::size_t col = it->first;
      const Scalar factor = it->second;
      for (const auto& [c, v] : q->second.row) {
        auto [slot, inserted] = row.row.try_emplace(c, -(factor * v));
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second.is_zero()) row.row.erase(slot);
        }
      }
      if (!q->second.rhs.is_zero()) row.rhs -= factor * q->second.rhs;
      it = row.row.upper_bound(col);
    }
    reduced.emplace(p->first, std::move(row));
  }

  LinearSolution out;
  out.solution.assign(n_, MPoly());
  for (const auto& [col, row] : reduced) out.solution[col] = row.rhs;

  // Free column f contributes e_f - sum_p row_p[f] e_p.
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
  for (const auto& [col, row] : reduced) {
    for (auto it = std::next(row.row.begin()); it != row.row.end(); ++it) {
      by_free[it->first].emplace_back(col, it->second);
    }
  }
  for (std::size_t f = 0; f < n_; ++f) {
    if (reduced.count(f)) continue;
    ScalarVector v(n_);
    v[f] = Scalar(1);
    if (auto it = by_free.find(f); it != by_free.end()) {
      for (const auto& [col, coeff] : it->second) v[col] = -coeff;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

LinearSolution linear_solve(const ScalarMatrix& a, const std::vector<MPoly>& rhs) {
  if (a.size() != rhs.size()) throw Error("linear_solve: matrix and right-hand side sizes differ");
  std::size_t n = a.empty() ? 0 : a.front().size();
  SparseEliminator elim(n);
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != n) throw Error("linear_solve: ragged matrix");
    SparseRow row;
    for (std::size_t c = 0; c < n; ++c) {
      if (!a[r][c].is_zero()) row.emplace(c, a[r][c]);
    }
    elim.add(std::move(row), rhs[r]);
  }
  return elim.solve();
}

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t num_columns) {
  SparseEliminator elim(num_columns);
  for (const auto& r : rows) elim.add(r);
  return elim.rank();
}

LinearEquation linear_equation(const MPoly& expr, const std::map<Var, std::size_t>& unknowns) {
  LinearEquation eq;
  for (const auto& [m, c] : expr.terms()) {
    const Var* unknown = nullptr;
    for (const auto& [v, e] : m.factors()) {
      if (!unknowns.count(v)) continue;
      if (unknown != nullptr || e != 1) {
        throw Error("linear_equation: unknowns appear nonlinearly in " + expr.to_string());
      }
      unknown = &v;
    }
    if (unknown == nullptr) {
      eq.rhs.add_term(m, -c);
      continue;
    }
    if (m.factors().size() != 1) {
      throw Error("linear_equation: unknown " + unknown->name() +
                  " has a non-scalar coefficient in " + expr.to_string());
    }
    std::size_t col = unknowns.at(*unknown);
    auto [slot, inserted] = eq.row.try_emplace(col, c);
    if (!inserted) slot->second += c;
  }
  return eq;
}

std::vector<LinearEquation> coefficient_equations(const MPoly& expr, const VarSet& vs,
                                                  const std::map<Var, std::size_t>& unknowns) {
  std::vector<LinearEquation> out;
  for (const auto& [m, coeff] : coefficients(expr, vs)) {
    if (!coeff.is_zero()) out.push_back(linear_equation(coeff, unknowns));
  }
  return out;
}

}  // namespace confalg
