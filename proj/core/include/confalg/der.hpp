#ifndef CONFALG_DER_HPP
#define CONFALG_DER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confalg/module.hpp"

namespace confalg {

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// Finitely supported scalar sequence (a_c).
struct SeqC {
  std::map<int, Scalar> entries;

  static SeqC delta(int c, const Scalar& value = Scalar(1)) { return SeqC{{{c, value}}}; }
  bool is_zero() const;
  friend bool operator==(const SeqC&, const SeqC&) = default;
};

/// Images D_l(X_i) in d and l for the generators with index in `window`.
struct DerivationSpec {
  std::string name;
  std::vector<std::string> families;
  Window window;
  std::map<Generator, LambdaPoly> images;
  std::optional<int> degree;  // images of index-i generators sit in index i + degree

  /// Zero for generators without an entry; throws WindowTooSmall outside
  /// the window.
  LambdaPoly image(const Generator& g) const;
  void set_image(const Generator& g, LambdaPoly p);

  friend bool operator==(const DerivationSpec&, const DerivationSpec&) = default;
};

/// s1 * D1 + s2 * D2 on the common window.
DerivationSpec combine(const Scalar& s1, const DerivationSpec& d1, const Scalar& s2, const DerivationSpec& d2);

/// Window of generator indices: {0} for index-0-only algebras, else [-N, N].
Window derivation_window(const AlgebraSpec& algebra, int n);

/// y -> [x_l y] for every generator y in the window.
DerivationSpec ad(const AlgebraSpec& algebra, const Element& x, int window);

/// L_i -> sum_c a_c M_{i+c}; every other family maps to 0.
DerivationSpec d_vec(const AlgebraSpec& algebra, const SeqC& a, int window);

/// D_l on a combination, using D_l(p(d) X) = p(d + l) D_l(X).
LambdaPoly apply_derivation(const DerivationSpec& der, const GenTerms& x);

/// D_l([x_m y]) - [(D_l x)_{l+m} y] - [x_m (D_l y)].
LambdaPoly leibniz_residual(const AlgebraSpec& algebra, const DerivationSpec& der, const Generator& x,
                            const Generator& y);

struct DerivationResidual {
  Generator x, y;
  LambdaPoly residual;
};

struct DerivationReport {
  std::size_t checked = 0;
  std::vector<DerivationResidual> nonzero;
  bool all_zero() const { return nonzero.empty(); }
};

/// Leibniz rule for all generator pairs x_i, y_j with i, j, i + j in the
/// window.
DerivationReport check_derivation(const AlgebraSpec& algebra, const DerivationSpec& der);

struct GradedDerivationSolution {
  int degree = 0;
  unsigned degree_bound = 0;
  int window = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t solution_dim = 0;
  std::size_t inner_rank = 0;
  bool inner_contained = false;
  std::size_t quotient_dim = 0;
  std::vector<DerivationSpec> basis;
  std::string scope;
};

/// Kernel of the Leibniz system for degree-c derivations whose images of
/// X_i (|i| <= N) are polynomials of total degree <= D in d and l.  Inner
/// derivations ad(d^k X_c), k < D, are generated explicitly and their rank
/// subtracted.  Numeric algebra parameters only.
GradedDerivationSolution solve_graded_derivations(const AlgebraSpec& algebra, int degree, unsigned degree_bound = 4,
                                                  int window = 2, bool keep_basis = false);

struct Decomposition {
  Element x;
  Scalar q;
  bool dvec_allowed = false;
};

/// Writes a degree-c derivation as ad(x) + q d_vec(delta_c), x = sum of
/// p_F(d) F_c with deg p_F < degree_bound.  The d_vec term is offered only
/// when d_vec(delta_c) is itself a derivation on the window.  Throws
/// NotDecomposable when no such x, q exist.
Decomposition decompose(const AlgebraSpec& algebra, const DerivationSpec& der, int degree,
                        unsigned degree_bound = 4);

std::string to_text(const DerivationSpec& der);
DerivationSpec derivation_from_text(std::string_view text);

}  // namespace confalg

#endif  // CONFALG_DER_HPP
