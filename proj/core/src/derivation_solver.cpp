#include <sstream>

#include "confalg/der.hpp"
#include "unknowns.hpp"

namespace confalg {

namespace {

const MPoly kL(vars::lambda);
const MPoly kM(vars::mu);

// Column layout: one block of monomials d^p l^q (p + q <= D) per
// (source generator, target family).
class ImageLayout {
 public:
  ImageLayout(const AlgebraSpec& algebra, Window window, int degree, unsigned bound)
      : window_(window), degree_(degree) {
    for (unsigned p = 0; p <= bound; ++p) {
      for (unsigned q = 0; p + q <= bound; ++q) {
        monomial_index_.emplace(std::make_pair(p, q), monomials_.size());
        monomials_.push_back(Monomial{});
        if (p > 0) monomials_.back() = monomials_.back() * Monomial::of(vars::d, p);
        if (q > 0) monomials_.back() = monomials_.back() * Monomial::of(vars::lambda, q);
      }
    }
    for (const auto& f : algebra.families) {
      for (int i = window.lo; i <= window.hi; ++i) {
        for (const auto& t : algebra.families) {
          block_.emplace(std::make_tuple(f, i, t), blocks_.size() * monomials_.size());
          blocks_.push_back({Generator{f, i}, Generator{t, i + degree}});
        }
      }
    }
  }

  std::size_t size() const { return blocks_.size() * monomials_.size(); }

  /// Column of the monomial d^p l^q in the image of `source` along `target`.
  std::optional<std::size_t> column(const Generator& source, const std::string& target, const Monomial& m) const {
    auto it = monomial_index_.find({m.exponent(vars::d), m.exponent(vars::lambda)});
    if (it == monomial_index_.end() || m.without({vars::d, vars::lambda}).is_one() == false) return std::nullopt;
    return block_.at({source.family, source.index, target}) + it->second;
  }

  /// Generic images with fresh unknowns, one per column.
  DerivationSpec generic(const AlgebraSpec& algebra, detail::UnknownPool& pool) const {
    DerivationSpec out;
    out.name = "generic";
    out.families = algebra.families;
    out.window = window_;
    out.degree = degree_;
    for (const auto& [source, target] : blocks_) {
      MPoly p;
      for (const auto& m : monomials_) p.add_term(Monomial::of(pool.fresh()) * m, 1);
      LambdaPoly image = out.images[source];
      image.add(target, p);
      out.images[source] = image;
    }
    return out;
  }

  DerivationSpec materialize(const AlgebraSpec& algebra, const ScalarVector& v) const {
    DerivationSpec out;
    out.name = "solution";
    out.families = algebra.families;
    out.window = window_;
    out.degree = degree_;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      MPoly p;
      for (std::size_t k = 0; k < monomials_.size(); ++k) p.add_term(monomials_[k], v[b * monomials_.size() + k]);
      if (p.is_zero()) continue;
      LambdaPoly image = out.image(blocks_[b].first);
      image.add(blocks_[b].second, p);
      out.set_image(blocks_[b].first, image);
    }
    return out;
  }

 private:
  Window window_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<std::pair<unsigned, unsigned>, std::size_t> monomial_index_;
  std::map<std::tuple<std::string, int, std::string>, std::size_t> block_;
  std::vector<std::pair<Generator, Generator>> blocks_;
};

}  // namespace

GradedDerivationSolution solve_graded_derivations(const AlgebraSpec& algebra, int degree, unsigned degree_bound,
                                                  int window, bool keep_basis) {
  if (degree_bound < 2) throw Error("solve_graded_derivations: degree bound must be at least 2");
  if (window < 2) throw WindowTooSmall("solve_graded_derivations: window N must be at least 2");
  for (const auto& [pair, terms] : algebra.table) {
    for (const auto& t : terms) {
      for (const auto& v : t.coeff.variables()) {
        if (!(v == vars::d) && !(v == vars::lambda)) {
          throw Error("solve_graded_derivations: bracket templates must be numeric, found " + v.name());
        }
      }
    }
  }
  const Window w = derivation_window(algebra, window);
  const ImageLayout layout(algebra, w, degree, degree_bound);

  GradedDerivationSolution out;
  out.degree = degree;
  out.degree_bound = degree_bound;
  out.window = window;
  out.unknowns = layout.size();

  detail::UnknownPool pool("u");
  const DerivationSpec generic = layout.generic(algebra, pool);
  const VarSet spectral{vars::d, vars::lambda, vars::mu};
  SparseEliminator elim(pool.size());
  for (const auto& fx : algebra.families) {
    for (const auto& fy : algebra.families) {
      for (int i = w.lo; i <= w.hi; ++i) {
        for (int j = w.lo; j <= w.hi; ++j) {
          if (!w.contains(i + j)) continue;
          const LambdaPoly r = leibniz_residual(algebra, generic, Generator{fx, i}, Generator{fy, j});
          for (const auto& [g, poly] : r.terms()) detail::add_coefficient_rows(elim, poly, spectral, pool.columns());
        }
      }
    }
  }
  out.rank = elim.rank();
  out.solution_dim = out.unknowns - out.rank;

  // Inner derivations ad(d^k X_c), k < D, written in the same coordinates.
  std::vector<SparseRow> inner;
  out.inner_contained = true;
  for (const auto& f : algebra.families) {
    for (unsigned k = 0; k < degree_bound; ++k) {
      Element x = Element::of(Generator{f, degree}, MPoly(1, Monomial::of(vars::d, k)));
      const DerivationSpec adx = ad(algebra, x, window);
      if (!check_derivation(algebra, adx).all_zero()) out.inner_contained = false;
      SparseRow row;
      for (const auto& [source, image] : adx.images) {
        for (const auto& [target, poly] : image.terms()) {
          for (const auto& [m, c] : poly.terms()) {
            auto col = layout.column(source, target.family, m);
            if (!col) {
              throw DegreeBoundExceeded("ad(" + x.to_string() + ") has an image of degree above " +
                                        std::to_string(degree_bound));
            }
            row.emplace(*col, c);
          }
        }
      }
      inner.push_back(std::move(row));
    }
  }
  out.inner_rank = sparse_rank(inner, layout.size());
  out.quotient_dim = out.solution_dim >= out.inner_rank ? out.solution_dim - out.inner_rank : 0;
  if (keep_basis) {
    for (const auto& v : elim.kernel_basis()) out.basis.push_back(layout.materialize(algebra, v));
  }
  std::ostringstream scope;
  scope << "certified for degree " << degree << " with images of X_i, |i| <= " << window
        << ", of total degree <= " << degree_bound << " in d and l";
  out.scope = scope.str();
  return out;
}

}  // namespace confalg
