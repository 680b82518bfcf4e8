#ifndef CONFALG_MODULE_HPP
#define CONFALG_MODULE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "confalg/lca.hpp"

namespace confalg {

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class DegreeBoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Module scalar names.  The extension scalar is "dext" because "d" is the
/// derivation operator.
namespace mparams {
inline const Var alpha{"alpha"};
inline const Var beta{"beta"};
inline const Var c{"c"};
inline const Var dext{"dext"};
}  // namespace mparams

/// Closed integer interval.
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int i) const { return lo <= i && i <= hi; }
  int size() const { return hi - lo + 1; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// 0/1 sequence a_m on a finite window.
class BitSeq {
 public:
  BitSeq() = default;
  BitSeq(int lo, std::vector<int> bits);

  static BitSeq from_string(int lo, std::string_view bits);
  static BitSeq random(Window w, std::mt19937_64& rng);
  static BitSeq constant(Window w, int bit);

  Window window() const { return {lo_, lo_ + static_cast<int>(bits_.size()) - 1}; }
  bool defined(int m) const { return window().contains(m) && !bits_.empty(); }
  int at(int m) const;
  bool is_constant() const;
  std::string to_string() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  int lo_ = 0;
  std::vector<int> bits_;
};

enum class ModuleKind {
  rank_one,  // M_{alpha,beta,c(,d)}: single generator v
  v_ab,      // V_{alpha,beta(,d)}
  v_Ab,      // V_{A,beta(,d)}
  table,     // explicit action table
};

std::string to_string(ModuleKind k);
ModuleKind module_kind_from_string(const std::string& s);

/// Builder parameters kept alongside the action table for serialization.
struct ModuleParams {
  ModuleKind kind = ModuleKind::table;
  std::string algebra;
  MPoly alpha, beta, c, dext;
  std::optional<BitSeq> bits;
  /// Family carrying the extension scalar: Y over CSV, M over CHV.
  std::string extension_family;
  friend bool operator==(const ModuleParams&, const ModuleParams&) = default;
};

/// Action X_i l v_m = table(X, i, m)(d, l) v_{i+m} of a graded free module,
/// or X_i l v = table(X, i, 0)(d, l) v of a rank-one module.  Entries are
/// defined for generator indices in `generators` and basis indices in
/// `basis`; a missing entry inside those windows is the zero action.
struct ModuleSpec {
  std::string name;
  bool graded = false;
  Window generators;
  Window basis;  // {0, 0} for rank one
  std::vector<std::string> families;
  std::map<std::tuple<std::string, int, int>, MPoly> table;
  ModuleParams params;

  int target(int i, int m) const { return graded ? i + m : m; }
  bool defined(int i, int m) const { return generators.contains(i) && basis.contains(m); }
  /// Throws WindowTooSmall outside the windows and UnknownFamily for a
  /// family that is not acting.
  MPoly action(const std::string& family, int i, int m) const;
  void set_action(const std::string& family, int i, int m, MPoly p);

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

/// Family receiving d c^i in the extension: Y if the algebra has it, else M.
std::string extension_family_of(const AlgebraSpec& algebra);

/// L_i -> c^i (d + alpha l + beta), extension family -> dext c^i, others 0.
/// Generator window is [-K, K] for a nonzero numeric c and [0, K] otherwise
/// (c^i is not a polynomial for negative i).  Index-0-only algebras get {0}.
ModuleSpec build_rank1(const AlgebraSpec& algebra, const MPoly& alpha, const MPoly& beta,
                       const MPoly& c, const MPoly& dext, int gen_bound = 2);

/// V_{alpha,beta,d} on basis [-N, N] with generators [-K, K].
ModuleSpec build_graded_ab(const AlgebraSpec& algebra, const MPoly& alpha, const MPoly& beta,
                           const MPoly& dext, int window = 3, int gen_bound = 2);
/// V_{A,beta,d}; `bits` must cover [-N-K, N+K].
ModuleSpec build_graded_Ab(const AlgebraSpec& algebra, const BitSeq& bits, const MPoly& beta,
                           const MPoly& dext, int window = 3, int gen_bound = 2);

/// The four-case L-action of V_{A,beta}.
MPoly bitseq_action(int a_m, int a_target, const MPoly& beta);

/// Structure polynomials entering one instance of the module axiom
///   A_i l (B_j m v_k) - B_j m (A_i l v_k) = [A_i l B_j]_{l+m} v_k.
struct AxiomInstance {
  MPoly b_on_k;                             // B_j on v_k
  MPoly a_on_jk;                            // A_i on v_{j+k}
  MPoly a_on_k;                             // A_i on v_k
  MPoly b_on_ik;                            // B_j on v_{i+k}
  std::map<std::string, MPoly> target_on_k;  // C_{i+j} on v_k, per bracket target C
};

/// LHS - RHS of the axiom as a polynomial in d, l, m.
MPoly module_residual(const std::vector<BracketTerm>& bracket, const AxiomInstance& inst);

struct ModuleResidual {
  std::string a, b;
  int i = 0, j = 0, k = 0;
  MPoly residual;
};

struct ModuleAxiomReport {
  std::size_t checked = 0;
  std::vector<ModuleResidual> nonzero;
  bool all_zero() const { return nonzero.empty(); }
};

/// Runs the module axiom for every ordered family pair and every index
/// triple whose touched generator and basis indices all lie in the windows.
ModuleAxiomReport check_module_axioms(const AlgebraSpec& algebra, const ModuleSpec& module);

/// Residuals of the five relations between the L, M, Y structure
/// coefficients f, g, h of a module over CSV(a, b), written out directly
/// rather than through the bracket table.
struct RelationResiduals {
  std::size_t checked = 0;
  std::map<std::string, std::size_t> nonzero;  // relation id -> count
  std::map<std::string, MPoly> first;          // relation id -> first nonzero residual
  bool all_zero() const { return nonzero.empty(); }
};

inline const std::vector<std::string> kRelationIds{"LM", "LY", "YY", "MY", "MM"};

RelationResiduals relations_oracle(const MPoly& a, const MPoly& b, const ModuleSpec& module);

std::string to_text(const ModuleSpec& module);
ModuleSpec module_from_text(std::string_view text);

}  // namespace confalg

#endif  // CONFALG_MODULE_HPP
