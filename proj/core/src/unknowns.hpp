#ifndef CONFALG_SRC_UNKNOWNS_HPP
#define CONFALG_SRC_UNKNOWNS_HPP

#include <map>
#include <string>
#include <vector>

#include "confalg/linsolve.hpp"
#include "confalg/mpoly.hpp"

namespace confalg::detail {

/// Fresh coefficient variables u0, u1, ... with their column numbers.
class UnknownPool {
 public:
  explicit UnknownPool(std::string prefix = "u") : prefix_(std::move(prefix)) {}

  Var fresh();
  std::size_t size() const { return vars_.size(); }
  const std::vector<Var>& vars() const { return vars_; }
  const std::map<Var, std::size_t>& columns() const { return columns_; }

  /// sum of u_k * x^p * y^q over p + q <= degree (or p <= degree when y is
  /// absent), one fresh unknown per monomial.
  MPoly generic(const std::vector<Var>& in, unsigned degree);

 private:
  std::string prefix_;
  std::vector<Var> vars_;
  std::map<Var, std::size_t> columns_;
};

/// Adds one row per coefficient of `expr` in `vs` to `elim`.
void add_coefficient_rows(SparseEliminator& elim, const MPoly& expr, const VarSet& vs,
                          const std::map<Var, std::size_t>& columns);

/// Substitutes a scalar vector for the pool variables.
MPoly instantiate(const MPoly& p, const std::vector<Var>& vars, const ScalarVector& values);

/// Outcome of solving polynomial equations in a set of unknowns by repeated
/// linear elimination plus the rule "c * u^e = 0 implies u = 0".
struct PropagationResult {
  bool consistent = true;
  std::map<Var, MPoly> assignment;  // solved unknown -> expression in the free ones
  std::vector<Var> free;
  std::vector<MPoly> unresolved;  // equations the rules could not reduce
};

PropagationResult propagate(std::vector<MPoly> equations, const std::vector<Var>& unknowns);

}  // namespace confalg::detail

#endif  // CONFALG_SRC_UNKNOWNS_HPP
