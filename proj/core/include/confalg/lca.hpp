#ifndef CONFALG_LCA_HPP
#define CONFALG_LCA_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confalg/mpoly.hpp"

namespace confalg {

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

/// Graded basis element X_i of a conformal algebra.
struct Generator {
  std::string family;
  int index = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  std::string to_string() const { return family + "_" + std::to_string(index); }
};

using GenTerms = std::map<Generator, MPoly>;

/// Finite combination sum_g p_g * g with polynomial coefficients.  Tag only
/// distinguishes algebra members (coefficients in d) from lambda-bracket
/// values (coefficients in d and the spectral variables).
template <class Tag>
class Combination {
 public:
  Combination() = default;
  explicit Combination(const GenTerms& terms) {
    for (const auto& [g, p] : terms) add(g, p);
  }
  static Combination of(const Generator& g, const MPoly& coeff = MPoly(1)) {
    Combination c;
    c.add(g, coeff);
    return c;
  }

  const GenTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MPoly coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? MPoly() : it->second;
  }

  void add(const Generator& g, const MPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [g, p] : o.terms_) add(g, p);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [g, p] : o.terms_) add(g, -p);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  Combination operator-() const {
    Combination out;
    for (const auto& [g, p] : terms_) out.terms_.emplace(g, -p);
    return out;
  }
  friend Combination operator*(const MPoly& s, const Combination& c) {
    Combination out;
    for (const auto& [g, p] : c.terms_) out.add(g, s * p);
    return out;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

  /// e.g. "(d + 2*l)*L_3 - M_0"; "0" for the empty combination.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, p] : terms_) {
      if (!out.empty()) out += " + ";
      if (p == MPoly(1)) {
        out += g.to_string();
      } else {
        out += "(" + p.to_string() + ")*" + g.to_string();
      }
    }
    return out;
  }

 private:
  GenTerms terms_;
};

struct ElementTag {};
struct LambdaTag {};
using Element = Combination<ElementTag>;
using LambdaPoly = Combination<LambdaTag>;

inline LambdaPoly as_lambda(const Element& x) { return LambdaPoly(x.terms()); }

/// One summand T(d, l) * target_{i+j} of a family bracket [A_i l B_j].
struct BracketTerm {
  std::string target;
  MPoly coeff;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

enum class IndexRange {
  all_integers,  // infinite rank: X_i for every integer i
  zero_only,     // finite rank: only X_0
};

/// Bracket data of a graded Lie conformal algebra.  Structure constants
/// depend on indices only through i + j, so one template per ordered family
/// pair determines every bracket; pairs missing from the table bracket to 0.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> families;
  std::map<std::pair<std::string, std::string>, std::vector<BracketTerm>> table;
  IndexRange indices = IndexRange::all_integers;

  bool has_family(const std::string& f) const;
  void require_family(const std::string& f) const;
  void require_generator(const Generator& g) const;
  /// Template of [A l B]; empty when the pair brackets to zero.
  const std::vector<BracketTerm>& entry(const std::string& a, const std::string& b) const;
  void set_bracket(const std::string& a, const std::string& b, std::vector<BracketTerm> terms);

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// p(d) -> p(d + s): the shift picked up by a coefficient on the right
/// argument of a bracket or on a module vector.
MPoly shift_outer(const MPoly& p, const MPoly& s);
/// p(d) -> p(-s): a coefficient on the left argument evaluated at the
/// spectral parameter s.
MPoly evaluate_argument(const MPoly& p, const MPoly& s);

/// [x_s y] for combinations whose coefficients may already contain other
/// spectral variables: [p(d)u _s q(d)v] = p(-s) q(d+s) [u _s v].
LambdaPoly bracket_at(const AlgebraSpec& spec, const GenTerms& x, const GenTerms& y,
                      const MPoly& spectral);

/// [x_l y] for algebra members.
LambdaPoly bracket(const AlgebraSpec& spec, const Element& x, const Element& y);

/// [A l B] + [B m A]|_{m -> -d-l}, on family templates.  Zero iff
/// skew-symmetry holds for the pair.
LambdaPoly check_skew(const AlgebraSpec& spec, const std::string& a, const std::string& b);

/// [A l [B m C]] - [[A l B]_{l+m} C] - [B m [A l C]] as polynomials in d, l, m.
LambdaPoly check_jacobi(const AlgebraSpec& spec, const std::string& a, const std::string& b,
                        const std::string& c);

struct SkewRecord {
  std::string a, b;
  LambdaPoly residual;
};

struct JacobiRecord {
  std::string a, b, c;
  LambdaPoly residual;
};

struct AxiomReport {
  std::vector<SkewRecord> skew;
  std::vector<JacobiRecord> jacobi;
  bool all_zero() const;
};

/// Skew-symmetry over unordered family pairs and the Jacobi identity over
/// family multisets (or over all ordered triples when `exhaustive`).
AxiomReport check_all_axioms(const AlgebraSpec& spec, bool exhaustive = false);

/// Keeps only the generators of grading index i.
template <class Tag>
Combination<Tag> grading_project(const Combination<Tag>& x, int i) {
  Combination<Tag> out;
  for (const auto& [g, p] : x.terms()) {
    if (g.index == i) out.add(g, p);
  }
  return out;
}

/// Text document listing the families and bracket templates.
std::string to_text(const AlgebraSpec& spec);
AlgebraSpec algebra_from_text(std::string_view text);

}  // namespace confalg

#endif  // CONFALG_LCA_HPP
