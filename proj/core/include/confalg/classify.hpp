#ifndef CONFALG_CLASSIFY_HPP
#define CONFALG_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "confalg/module.hpp"

namespace confalg {

/// One implication of a classification run, checked as an exact statement.
struct ClassifyStep {
  std::string id;
  std::string statement;
  bool holds = false;
  std::string detail;
};

enum class ExtensionOutcome {
  none,       // every non-L family acts by zero
  extension,  // the extension family acts by the expected one-parameter family
  other,      // anything else (reported, never expected)
};

std::string to_string(ExtensionOutcome o);

/// Stands for c^i in rank-one results; c^j and c^(i+j) use cj and ci*cj.
namespace rank1_vars {
inline const Var ci{"ci"};
inline const Var cj{"cj"};
}  // namespace rank1_vars

struct Rank1Classification {
  std::string algebra;
  Scalar a, b;
  unsigned degree_bound = 0;
  std::string extension_family;  // Y over csv, M over chv
  ExtensionOutcome outcome = ExtensionOutcome::other;
  /// Action of the extension family on v for generator index i, in terms of
  /// ci = c^i and dext; zero when outcome == none.
  MPoly extension_action;
  /// Action of M over csv (always expected to vanish).
  MPoly other_action;
  std::vector<ClassifyStep> steps;
};

/// Classifies rank-one modules over csv(a, b) or chv(a, b) whose L-action is
/// c^i (d + alpha l + beta), with alpha, beta, c symbolic.  Unknown actions
/// are polynomials of degree <= degree_bound.  Throws DegreeBoundExceeded if
/// a solution reaches the bound (it might be truncated).
Rank1Classification classify_rank1(const std::string& algebra, const Scalar& a, const Scalar& b,
                                   unsigned degree_bound = 6);

struct GradedBase {
  ModuleKind kind = ModuleKind::v_ab;  // v_ab or v_Ab
  Scalar alpha;                        // v_ab only
  Scalar beta;
  std::optional<BitSeq> bits;          // v_Ab only, covering [-N-K, N+K]
};

struct GradedClassification {
  std::string algebra;
  Scalar a, b;
  GradedBase base;
  unsigned degree_bound = 0;
  int window = 0, gen_bound = 0;
  std::string extension_family;
  ExtensionOutcome outcome = ExtensionOutcome::other;
  /// Dimension of the final solution set for the non-L coefficients.
  std::size_t solution_dim = 0;
  bool other_family_zero = false;  // M over csv vanishes identically
  /// The surviving module (extension scalar set to dext) when the outcome
  /// is none or extension.
  std::optional<ModuleSpec> solution;
  std::vector<ClassifyStep> steps;
};

/// Solves for the M (and Y) structure coefficients of a graded module over
/// csv(a, b) or chv(a, b) whose L-action is the given base module, on basis
/// window [-N, N] with generators in [-K, K].
GradedClassification classify_graded(const std::string& algebra, const Scalar& a, const Scalar& b,
                                     const GradedBase& base, unsigned degree_bound = 6,
                                     int window = 3, int gen_bound = 2);

struct WitnessResult {
  bool trivial_module = false;  // c = 0: flagged instead of searched
  std::optional<MPoly> witness;  // monic q(d)
  unsigned searched_degree = 0;
  std::vector<std::string> notes;
};

/// Searches monic q(d) of degree 1..max_degree with C[d] q(d) v a submodule
/// of the numeric rank-one module; returns the first hit by degree.
WitnessResult reducibility_witness(const ModuleSpec& module, unsigned max_degree = 3);

}  // namespace confalg

#endif  // CONFALG_CLASSIFY_HPP
