#include <gtest/gtest.h>

#include "confalg/catalog.hpp"
#include "confalg/der.hpp"
#include "confalg/linsolve.hpp"
#include "confalg/random.hpp"

namespace confalg {
namespace {

const std::vector<Var> kVars{vars::d, vars::lambda, vars::mu, Var("a"), Var("b")};

class PolyProperty : public ::testing::TestWithParam<int> {
 protected:
  Rng rng{static_cast<std::uint64_t>(GetParam())};
  MPoly draw() { return random_poly(rng, kVars, 4, 6); }
};

TEST_P(PolyProperty, RingLaws) {
  for (int k = 0; k < 20; ++k) {
    const MPoly p = draw(), q = draw(), r = draw();
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p - p).terms().empty());
  }
}

TEST_P(PolyProperty, DivideExactRoundTrip) {
  for (int k = 0; k < 20; ++k) {
    const MPoly p = draw();
    const MPoly q = random_nonzero_poly(rng, kVars, 3, 4);
    EXPECT_EQ(divide_exact(p * q, q), p);
  }
}

TEST_P(PolyProperty, CoefficientReconstruction) {
  const VarSet vs{vars::d, vars::lambda};
  for (int k = 0; k < 20; ++k) {
    const MPoly p = draw();
    MPoly sum;
    for (const auto& [mono, c] : coefficients(p, vs)) {
      EXPECT_EQ(coeff_extract(p, vs, mono), c);
      sum += c * MPoly(Scalar(1), mono);
    }
    EXPECT_EQ(sum, p);
  }
}

TEST_P(PolyProperty, TextRoundTrip) {
  for (int k = 0; k < 20; ++k) {
    const MPoly p = random_poly(rng, kVars, 4, 6, 7);
    EXPECT_EQ(MPoly::parse(p.to_string()), p);
  }
}

TEST_P(PolyProperty, LinearSolveSatisfiesSystem) {
  std::uniform_int_distribution<int> dim(1, 5);
  for (int k = 0; k < 10; ++k) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    ScalarMatrix a(rows, ScalarVector(cols));
    for (auto& row : a) {
      for (auto& x : row) x = rng() % 3 == 0 ? Scalar(0) : random_scalar(rng, 4, true);
    }
    // Right-hand side in the column span so the system is consistent.
    std::vector<MPoly> x0(cols);
    for (auto& x : x0) x = random_poly(rng, {Var("a"), Var("b")}, 1, 2);
    std::vector<MPoly> rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) rhs[i] += MPoly(a[i][j]) * x0[j];
    }
    const LinearSolution s = linear_solve(a, rhs);
    for (std::size_t i = 0; i < rows; ++i) {
      MPoly lhs;
      for (std::size_t j = 0; j < cols; ++j) lhs += MPoly(a[i][j]) * s.solution[j];
      EXPECT_EQ(lhs, rhs[i]);
      for (const auto& kv : s.kernel_basis) {
        Scalar acc;
        for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * kv[j];
        EXPECT_TRUE(acc.is_zero());
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolyProperty, ::testing::Range(1, 11));

class BracketProperty : public ::testing::TestWithParam<int> {
 protected:
  Rng rng{static_cast<std::uint64_t>(1000 + GetParam())};
  const AlgebraSpec alg = build_csv(MPoly(params::a), MPoly(params::b));
};

TEST_P(BracketProperty, Bilinearity) {
  for (int k = 0; k < 10; ++k) {
    const Element x = random_element(rng, alg.families, -2, 2, 2, 3);
    const Element y = random_element(rng, alg.families, -2, 2, 2, 3);
    const Element z = random_element(rng, alg.families, -2, 2, 2, 3);
    const MPoly p = random_poly(rng, {vars::d}, 2, 3);
    const MPoly p_at = evaluate_argument(p, MPoly(vars::lambda));
    EXPECT_EQ(bracket(alg, p * x + y, z), p_at * bracket(alg, x, z) + bracket(alg, y, z));
    const MPoly p_shift = shift_outer(p, MPoly(vars::lambda));
    EXPECT_EQ(bracket(alg, x, p * y + z), p_shift * bracket(alg, x, y) + bracket(alg, x, z));
  }
}

TEST_P(BracketProperty, GradingAndIndexIndependence) {
  std::uniform_int_distribution<int> idx(-5, 5);
  for (int k = 0; k < 10; ++k) {
    const int i = idx(rng), j = idx(rng);
    const Element x = random_element(rng, alg.families, i, 2);
    const Element y = random_element(rng, alg.families, j, 2);
    const LambdaPoly xy = bracket(alg, x, y);
    for (const auto& [g, p] : xy.terms()) EXPECT_EQ(g.index, i + j);

    const LambdaPoly ij = bracket(alg, Element::of({"L", i}), Element::of({"M", j}));
    const LambdaPoly zero = bracket(alg, Element::of({"L", 0}), Element::of({"M", 0}));
    ASSERT_EQ(ij.terms().size(), zero.terms().size());
    EXPECT_EQ(ij.coeff({"M", i + j}), zero.coeff({"M", 0}));
  }
}

TEST_P(BracketProperty, DerivationShiftCompatibility) {
  const AlgebraSpec num = build_csv(MPoly(1), MPoly(2));
  const Element x = random_element(rng, num.families, 0, 2);
  const DerivationSpec d = combine(1, ad(num, x, 2), 3, d_vec(num, SeqC::delta(0), 2));
  const MPoly p = random_nonzero_poly(rng, {vars::d}, 2, 3);
  const GenTerms y{{{"L", 1}, p}};
  const GenTerms y0{{{"L", 1}, MPoly(1)}};
  EXPECT_EQ(apply_derivation(d, y), shift_outer(p, MPoly(vars::lambda)) * apply_derivation(d, y0));
}

TEST_P(BracketProperty, DecomposeRecoversInputs) {
  const AlgebraSpec num = build_csv(MPoly(1), MPoly(-3));
  std::uniform_int_distribution<int> deg(-1, 1);
  const int c = deg(rng);
  const Element x = random_element(rng, num.families, c, 2);
  const Scalar q = random_scalar(rng);
  const DerivationSpec d = combine(1, ad(num, x, 2), q, d_vec(num, SeqC::delta(c), 2));
  const Decomposition dec = decompose(num, d, c, 4);
  EXPECT_EQ(dec.x, x);
  EXPECT_EQ(dec.q, q);
}

INSTANTIATE_TEST_SUITE_P(Seeds, BracketProperty, ::testing::Range(1, 11));

}  // namespace
}  // namespace confalg
