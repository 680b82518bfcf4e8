#ifndef CONFALG_RANDOM_HPP
#define CONFALG_RANDOM_HPP

#include <random>
#include <string>
#include <vector>

#include "confalg/lca.hpp"

namespace confalg {

using Rng = std::mt19937_64;

/// Rational p/q with |p| <= bound and 1 <= q <= bound; with `gaussian` the
/// imaginary part is drawn the same way.
Scalar random_scalar(Rng& rng, int bound = 5, bool gaussian = false);

/// As random_scalar but never zero.
Scalar random_nonzero_scalar(Rng& rng, int bound = 5, bool gaussian = false);

/// Up to `max_terms` terms of total degree <= max_degree over `vars`.
MPoly random_poly(Rng& rng, const std::vector<Var>& vars, unsigned max_degree, unsigned max_terms,
                  int coeff_bound = 5);

/// Nonzero polynomial; see random_poly.
MPoly random_nonzero_poly(Rng& rng, const std::vector<Var>& vars, unsigned max_degree, unsigned max_terms,
                          int coeff_bound = 5);

/// Homogeneous element sum_F p_F(d) F_index over the given families, with
/// deg p_F <= max_degree; some families may be left out.
Element random_element(Rng& rng, const std::vector<std::string>& families, int index, unsigned max_degree);

/// Element with generators of indices in [lo, hi].
Element random_element(Rng& rng, const std::vector<std::string>& families, int lo, int hi,
                       unsigned max_degree, unsigned max_terms);

}  // namespace confalg

#endif  // CONFALG_RANDOM_HPP
