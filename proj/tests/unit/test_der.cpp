#include <gtest/gtest.h>

#include "confalg/catalog.hpp"
#include "confalg/der.hpp"
#include "confalg/random.hpp"

namespace confalg {
namespace {

MPoly P(const char* text) { return MPoly::parse(text); }
LambdaPoly lam(const std::string& f, int i, const MPoly& p) { return LambdaPoly::of({f, i}, p); }

AlgebraSpec csv(const MPoly& a, const MPoly& b) { return build_csv(a, b); }

TEST(Ad, ImagesFollowBrackets) {
  const DerivationSpec d = ad(csv(MPoly(params::a), MPoly(params::b)), Element::of({"L", 0}), 2);
  for (int j = -2; j <= 2; ++j) EXPECT_EQ(d.image({"L", j}), lam("L", j, P("d + 2*l")));
  EXPECT_EQ(d.degree, 0);
  EXPECT_THROW(d.image({"L", 3}), WindowTooSmall);
}

TEST(Ad, ZeroElementGivesZeroMap) {
  const DerivationSpec d = ad(csv(0, 0), Element(), 2);
  for (int j = -2; j <= 2; ++j) EXPECT_TRUE(d.image({"M", j}).is_zero());
}

TEST(Ad, ReversedLMBracketBySkew) {
  // [M l L] = ((a - 1) d + a l - b) M, which is l M at (a, b) = (1, 0).
  const DerivationSpec sym = ad(csv(MPoly(params::a), MPoly(params::b)), Element::of({"M", 1}), 2);
  EXPECT_EQ(sym.image({"L", 0}), lam("M", 1, P("(a - 1)*d + a*l - b")));
  const DerivationSpec d = ad(build_chv(1, 0), Element::of({"M", 1}), 2);
  EXPECT_EQ(d.image({"L", 0}), lam("M", 1, P("l")));
}

TEST(DVec, Images) {
  const AlgebraSpec alg = csv(1, MPoly(params::b));
  const DerivationSpec d0 = d_vec(alg, SeqC::delta(0), 2);
  for (int i = -2; i <= 2; ++i) {
    EXPECT_EQ(d0.image({"L", i}), lam("M", i, MPoly(1)));
    EXPECT_TRUE(d0.image({"M", i}).is_zero());
    EXPECT_TRUE(d0.image({"Y", i}).is_zero());
  }
  EXPECT_TRUE(d_vec(alg, SeqC{}, 2).image({"L", 1}).is_zero());
  const DerivationSpec mixed = d_vec(alg, SeqC{{{-1, 2}, {3, 5}}}, 2);
  EXPECT_EQ(mixed.image({"L", 0}), lam("M", -1, MPoly(2)) + lam("M", 3, MPoly(5)));
  EXPECT_FALSE(mixed.degree);
}

TEST(Leibniz, DVecIsDerivationForAEqualsOne) {
  Rng rng(17);
  for (const char* name : {"csv", "chv"}) {
    const AlgebraSpec alg = build_named(name, MPoly(1), MPoly(params::b));
    for (int k = 0; k < 3; ++k) {
      SeqC a;
      for (int c = -2; c <= 2; ++c) {
        if (rng() % 2) a.entries[c] = random_nonzero_scalar(rng);
      }
      EXPECT_TRUE(check_derivation(alg, d_vec(alg, a, 3)).all_zero()) << name << k;
    }
  }
}

TEST(Leibniz, DVecFailsForAEqualsZero) {
  const DerivationReport r = check_derivation(csv(0, 0), d_vec(csv(0, 0), SeqC::delta(0), 2));
  ASSERT_FALSE(r.all_zero());
  bool ll = false;
  for (const auto& f : r.nonzero) ll = ll || (f.x.family == "L" && f.y.family == "L");
  EXPECT_TRUE(ll);
  const LambdaPoly res = leibniz_residual(csv(0, 0), d_vec(csv(0, 0), SeqC::delta(0), 2), {"L", 0}, {"L", 0});
  ASSERT_EQ(res.terms().size(), 1u);
  const MPoly p = res.terms().begin()->second;
  EXPECT_FALSE(evaluate(p, {{vars::d, 1}, {vars::lambda, 2}, {vars::mu, 3}}).is_zero());
}

TEST(Leibniz, InnerDerivationsPass) {
  Rng rng(23);
  const AlgebraSpec alg = csv(Scalar::fraction(1, 2), Scalar(-3));
  for (int k = 0; k < 5; ++k) {
    const Element x = random_element(rng, alg.families, -1, 1, 2, 3);
    EXPECT_TRUE(check_derivation(alg, ad(alg, x, 3)).all_zero()) << x.to_string();
  }
}

TEST(Leibniz, ResidualIsLinear) {
  const AlgebraSpec alg = csv(0, 1);
  const DerivationSpec d1 = d_vec(alg, SeqC::delta(0), 2);
  const DerivationSpec d2 = d_vec(alg, SeqC::delta(1, 3), 2);
  const Scalar s1(2), s2 = Scalar::fraction(-1, 3);
  const DerivationSpec mix = combine(s1, d1, s2, d2);
  const Generator x{"L", -1}, y{"L", 1};
  EXPECT_EQ(leibniz_residual(alg, mix, x, y),
            MPoly(s1) * leibniz_residual(alg, d1, x, y) + MPoly(s2) * leibniz_residual(alg, d2, x, y));
}

TEST(Leibniz, WindowTooSmallSurfaces) {
  const AlgebraSpec alg = csv(1, 0);
  DerivationSpec d = d_vec(alg, SeqC::delta(0), 1);
  EXPECT_THROW(leibniz_residual(alg, d, {"L", 1}, {"L", 1}), WindowTooSmall);
}

TEST(Solver, InnerOnlyAwayFromAEqualsOne) {
  const GradedDerivationSolution s = solve_graded_derivations(csv(2, 3), 0, 4, 2);
  EXPECT_TRUE(s.inner_contained);
  EXPECT_EQ(s.quotient_dim, 0u);
  EXPECT_EQ(s.solution_dim, s.inner_rank);
  EXPECT_EQ(s.inner_rank, 12u);
  EXPECT_FALSE(s.scope.empty());
}

TEST(Solver, OneExtraAtAEqualsOne) {
  const GradedDerivationSolution s = solve_graded_derivations(csv(1, 0), 0, 4, 2);
  EXPECT_TRUE(s.inner_contained);
  EXPECT_EQ(s.quotient_dim, 1u);
}

TEST(Solver, DegreeOneAtOrigin) {
  const GradedDerivationSolution s = solve_graded_derivations(csv(0, 0), 1, 4, 2);
  EXPECT_TRUE(s.inner_contained);
  EXPECT_EQ(s.quotient_dim, 0u);
}

TEST(Solver, HeisenbergVirasoroVariants) {
  EXPECT_EQ(solve_graded_derivations(build_chv(0, 0), 0, 4, 2).quotient_dim, 0u);
  EXPECT_EQ(solve_graded_derivations(build_chv(1, 0), 0, 4, 2).quotient_dim, 1u);
}

TEST(Solver, BasisElementsAreDerivations) {
  const AlgebraSpec alg = build_chv(1, 0);
  const GradedDerivationSolution s = solve_graded_derivations(alg, 1, 3, 2, true);
  ASSERT_EQ(s.basis.size(), s.solution_dim);
  for (const auto& d : s.basis) EXPECT_TRUE(check_derivation(alg, d).all_zero());
}

TEST(Solver, SymbolicParametersRejected) {
  EXPECT_THROW(solve_graded_derivations(csv(MPoly(params::a), 0), 0, 4, 2), Error);
}

TEST(Decompose, InnerRoundTrip) {
  const AlgebraSpec alg = csv(2, 3);
  const Element x = Element::of({"L", 1}, P("d^2"));
  const Decomposition dec = decompose(alg, ad(alg, x, 2), 1, 4);
  EXPECT_EQ(dec.x, x);
  EXPECT_TRUE(dec.q.is_zero());
  EXPECT_FALSE(dec.dvec_allowed);
}

TEST(Decompose, InnerPlusDVec) {
  const AlgebraSpec alg = csv(1, 0);
  const DerivationSpec d = combine(1, ad(alg, Element::of({"M", 0}), 2), 1, d_vec(alg, SeqC::delta(0, 7), 2));
  const Decomposition dec = decompose(alg, d, 0, 4);
  EXPECT_EQ(dec.x, Element::of({"M", 0}));
  EXPECT_EQ(dec.q, Scalar(7));
  EXPECT_TRUE(dec.dvec_allowed);
}

TEST(Decompose, PureDVec) {
  const AlgebraSpec alg = csv(1, 5);
  const Decomposition dec = decompose(alg, d_vec(alg, SeqC::delta(2), 2), 2, 4);
  EXPECT_TRUE(dec.x.is_zero());
  EXPECT_EQ(dec.q, Scalar(1));
}

TEST(Decompose, RejectsNonDerivation) {
  const AlgebraSpec alg = csv(0, 0);
  EXPECT_THROW(decompose(alg, d_vec(alg, SeqC::delta(0), 2), 0, 4), NotDecomposable);
}

TEST(Text, DerivationRoundTrip) {
  const AlgebraSpec alg = csv(1, MPoly(params::b));
  const DerivationSpec d = combine(1, ad(alg, Element::of({"Y", 0}, P("d + b")), 2), 2, d_vec(alg, SeqC::delta(0), 2));
  EXPECT_EQ(derivation_from_text(to_text(d)), d);
}

}  // namespace
}  // namespace confalg
