#ifndef CONFALG_CATALOG_HPP
#define CONFALG_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "confalg/lca.hpp"
#include "confalg/linsolve.hpp"

namespace confalg {

/// Parameter names used by the builders when a parameter is symbolic.
namespace params {
inline const Var a{"a"};
inline const Var b{"b"};
inline const Var a_prime{"a'"};
inline const Var b_prime{"b'"};
}  // namespace params

/// Four-template family M(a, a', b, b'):
///   [L l L] = (d + 2l) L,  [L l M] = (d + a l + b) M,
///   [L l Y] = (d + a' l + b') Y,  [Y l Y] = (d + 2l) M,
/// together with the reversed pairs written out from the skew rule.
AlgebraSpec build_construction(const MPoly& a, const MPoly& a_prime, const MPoly& b,
                               const MPoly& b_prime);

/// CSV(a, b) = M(a, a/2 + 1, b, b/2).
AlgebraSpec build_csv(const MPoly& a, const MPoly& b);
/// Heisenberg-Virasoro type subalgebra spanned by L_i, M_i.
AlgebraSpec build_chv(const MPoly& a, const MPoly& b);
/// Loop Virasoro algebra spanned by L_i.
AlgebraSpec build_cw();
/// Index-0 (finite rank) restrictions.
AlgebraSpec build_sv(const MPoly& a, const MPoly& b);
AlgebraSpec build_hv(const MPoly& a, const MPoly& b);
AlgebraSpec build_cvir();

/// Restriction of `parent` to a subset of its families; optionally also to
/// index 0.  Brackets leaving the subset are dropped, so the result need not
/// be closed; see subalgebra_check.
AlgebraSpec restrict_algebra(const AlgebraSpec& parent, const std::vector<std::string>& families,
                             std::optional<IndexRange> indices = std::nullopt,
                             std::string name = "");

/// True iff `sub` is a bracket-closed restriction of `parent` with identical
/// templates.
bool subalgebra_check(const AlgebraSpec& parent, const AlgebraSpec& sub);

/// Named catalog lookup: csv, chv, cw, sv, hv, cvir, mfam.  `a_prime` and
/// `b_prime` are only read for mfam.
AlgebraSpec build_named(const std::string& id, const MPoly& a, const MPoly& b,
                        const MPoly& a_prime = MPoly(params::a_prime),
                        const MPoly& b_prime = MPoly(params::b_prime));

/// One coefficient of the (L, Y, Y) Jacobi residual of M(a, a', b, b').
struct CoefficientEquation {
  Monomial monomial;  // in d, l, m
  MPoly coefficient;  // in a, a', b, b'
};

struct ConstructionSolution {
  MPoly a_prime;
  MPoly b_prime;
  /// Full coefficient table of the residual, before solving.
  std::vector<CoefficientEquation> equations;
  /// Number of equations actually handed to the linear solver.
  std::size_t equations_used = 0;
};

/// Solves for the (a', b') making M(a, a', b, b') a Lie conformal algebra.
/// When `only` is given, just those residual coefficients are used.  Throws
/// Inconsistent if the system has no solution and Error if the solution is
/// not unique.
ConstructionSolution solve_construction(const std::vector<Monomial>* only = nullptr);

// ------------------------------------------------------------- Lie algebras

/// Plain Z-graded Lie algebra with structure constants polynomial in the two
/// indices, written in the variables x (first index) and y (second index).
struct LieTerm {
  std::string target;
  MPoly coeff;
};

struct LieAlgebraSpec {
  std::string name;
  std::vector<std::string> families;
  std::map<std::pair<std::string, std::string>, std::vector<LieTerm>> table;
};

namespace lie_vars {
inline const Var first{"x"};
inline const Var second{"y"};
}  // namespace lie_vars

/// Twisted Schroedinger-Virasoro brackets on integer indices, with both
/// orders of every pair written out.
LieAlgebraSpec build_tsv_lie();

using LieElement = std::map<Generator, Scalar>;

LieElement lie_bracket(const LieAlgebraSpec& spec, const LieElement& x, const LieElement& y);

struct LieCheckReport {
  int window = 0;
  std::size_t antisymmetry_checks = 0;
  std::size_t jacobi_checks = 0;
  std::vector<std::string> failures;  // first few failing instances
  std::size_t failure_count = 0;
  bool ok() const { return failure_count == 0; }
};

/// Anti-symmetry on all pairs and the Jacobi identity on all triples of
/// generators with indices in [-window, window].
LieCheckReport lie_jacobi_check(const LieAlgebraSpec& spec, int window);

}  // namespace confalg

#endif  // CONFALG_CATALOG_HPP
