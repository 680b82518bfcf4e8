#ifndef CONFALG_LINSOLVE_HPP
#define CONFALG_LINSOLVE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "confalg/mpoly.hpp"

namespace confalg {

class Inconsistent : public Error {
 public:
  using Error::Error;
};

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using ScalarVector = std::vector<Scalar>;

/// Sparse row: column index -> nonzero scalar.
using SparseRow = std::map<std::size_t, Scalar>;

struct LinearSolution {
  /// Particular solution with every free unknown set to zero.
  std::vector<MPoly> solution;
  /// Basis of the kernel of the coefficient matrix (one vector per free unknown).
  std::vector<ScalarVector> kernel_basis;
};

/// Solves A x = rhs over the Gaussian rationals; the right-hand side may
/// carry parameter polynomials.  Throws Inconsistent when some equation
/// reduces to 0 = nonzero.
LinearSolution linear_solve(const ScalarMatrix& a, const std::vector<MPoly>& rhs);

/// Incremental sparse Gaussian elimination.  Rows are reduced against the
/// current pivots as they arrive, so only an echelon basis of rank <= n is
/// ever stored.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t num_unknowns) : n_(num_unknowns) {}

  std::size_t num_unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Adds the equation row . x = rhs.  Returns false when the row was
  /// linearly dependent on earlier rows (its reduced rhs is kept for the
  /// consistency check).
  bool add(SparseRow row, MPoly rhs = MPoly());

  /// True when some dependent row reduced to 0 = nonzero.
  bool inconsistent() const { return !conflict_.is_zero(); }
  const MPoly& conflict() const { return conflict_; }

  /// Reduces a row against the pivots (used for span-membership tests).
  SparseRow reduce(SparseRow row) const;

  /// Reduced row echelon form, particular solution and kernel basis.
  LinearSolution solve() const;
  std::vector<ScalarVector> kernel_basis() const { return solve().kernel_basis; }

 private:
  struct Pivot {
    SparseRow row;  // leading entry normalized to 1
    MPoly rhs;
  };

  void reduce_in_place(SparseRow& row, MPoly& rhs, bool track_rhs) const;

  std::size_t n_;
  std::map<std::size_t, Pivot> pivots_;
  MPoly conflict_;
};

/// Equation "expr = 0" that is affine-linear in a set of unknown variables.
struct LinearEquation {
  SparseRow row;
  MPoly rhs;  // row . x = rhs
};

/// Splits `expr` (affine-linear in the unknowns, with scalar coefficients on
/// every unknown) into row and right-hand side.  Throws Error when an unknown
/// appears nonlinearly or multiplied by another variable.
LinearEquation linear_equation(const MPoly& expr, const std::map<Var, std::size_t>& unknowns);

/// One linear equation per coefficient of `expr` viewed as a polynomial in
/// `vs`; zero coefficients are skipped.
std::vector<LinearEquation> coefficient_equations(const MPoly& expr, const VarSet& vs,
                                                  const std::map<Var, std::size_t>& unknowns);

/// Rank of a set of sparse vectors.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t num_columns);

}  // namespace confalg

#endif  // CONFALG_LINSOLVE_HPP
