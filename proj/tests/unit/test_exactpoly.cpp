#include <gtest/gtest.h>

#include "confalg/linsolve.hpp"
#include "confalg/mpoly.hpp"

namespace confalg {
namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

const Var d = vars::d;
const Var l = vars::lambda;
const Var m = vars::mu;

TEST(Scalar, ParsesAndPrintsGaussianRationals) {
  EXPECT_EQ(Scalar::parse("-1/2").to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse("1/2+3/4i"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::imaginary_unit());
  EXPECT_EQ(Scalar::parse("4/6"), Scalar::fraction(2, 3));
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse("x"), ParseError);
}

TEST(Scalar, FieldOperations) {
  const Scalar z = Scalar::parse("1+2i");
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z * z, Scalar::parse("-3+4i"));
  EXPECT_EQ(Scalar(2).pow(-2), Scalar::fraction(1, 4));
}

TEST(MPoly, AddCancels) { EXPECT_EQ(P("d + 2*l") + P("-d"), P("2*l")); }

TEST(MPoly, ProductOfShiftedLinearFactors) {
  const MPoly beta = MPoly::var("beta");
  const MPoly lhs = (MPoly(d) + beta) * (MPoly(d) + beta + MPoly(l));
  EXPECT_EQ(lhs, P("d^2 + 2*beta*d + l*d + beta^2 + beta*l"));
}

TEST(MPoly, TimesZeroIsZero) {
  EXPECT_TRUE((P("d^3 + 7*l*b") * MPoly()).is_zero());
  EXPECT_TRUE((P("d - d")).is_zero());
}

TEST(MPoly, CanonicalTextRoundTrip) {
  const MPoly p = P("(1/2)*d + (3/2)*l - (1/2)*b + (1/3+2*i)*a'*m^2 - i*d");
  EXPECT_EQ(MPoly::parse(p.to_string()), p);
  EXPECT_EQ(MPoly::parse(p.to_string()).to_string(), p.to_string());
  EXPECT_EQ(P("(1/2)*d + (3/2)*l - (1/2)*b").to_string(), "(1/2)*d + (3/2)*l - (1/2)*b");
  EXPECT_THROW(P("d +"), ParseError);
  EXPECT_THROW(P("1/d"), ParseError);
}

TEST(MPoly, GradedLexOrderPutsSpectralVariablesFirst) {
  EXPECT_EQ(P("b + d").to_string(), "d + b");
  EXPECT_EQ(P("l + d^2 + d*l").to_string(), "d^2 + d*l + l");
}

TEST(Substitute, LinearSubstitution) {
  EXPECT_EQ(substitute(P("d + 2*l"), l, P("-d - l")), P("-d - 2*l"));
}

TEST(Substitute, ShiftOfDerivationVariable) {
  EXPECT_EQ(substitute(P("d + a*l + b"), d, P("d + m")), P("d + m + a*l + b"));
}

TEST(Substitute, EvaluatesPowerOfC) {
  const MPoly c = MPoly::var("c");
  EXPECT_EQ(substitute(c * c * c, Var("c"), MPoly(2)), MPoly(8));
}

TEST(Substitute, SimultaneousSemantics) {
  // Swapping d and l needs simultaneous replacement.
  EXPECT_EQ(substitute(P("d + 2*l"), {{d, MPoly(l)}, {l, MPoly(d)}}), P("l + 2*d"));
}

TEST(CoeffExtract, PicksCoefficientInChosenVariables) {
  EXPECT_EQ(coeff_extract(P("(a+1)*d*l + b*d"), {d, l}, Monomial{{d, 1}, {l, 1}}), P("a + 1"));
  EXPECT_EQ(coeff_extract(P("2*(a' - 1)*l^2"), {l}, Monomial{{l, 2}}), P("2*a' - 2"));
  EXPECT_TRUE(coeff_extract(P("d*l + b"), {d, l}, Monomial{{d, 2}}).is_zero());
  EXPECT_THROW(coeff_extract(P("d*l + b"), {d, l}, Monomial{{m, 1}}), Error);
  EXPECT_EQ(coeff_extract(P("d*l + b"), {d, l}, Monomial{}), P("b"));
}

TEST(DivideExact, QuotientsAndFailures) {
  EXPECT_EQ(divide_exact(P("l*d + 2*l^2"), P("l")), P("d + 2*l"));
  EXPECT_EQ(divide_exact(P("(l - b)*(d + 1)"), P("l - b")), P("d + 1"));
  EXPECT_THROW(divide_exact(P("d + 1"), P("l")), NotDivisible);
  EXPECT_THROW(divide_exact(P("d"), MPoly()), Error);
}

TEST(DivideMonic, RemainderHasLowerDegree) {
  const auto [q, r] = divide_monic(P("d^3 + l*d + 1"), P("d - 2"), d);
  EXPECT_EQ(q * P("d - 2") + r, P("d^3 + l*d + 1"));
  EXPECT_EQ(r.degree_in(d), 0u);
}

TEST(LinearSolve, SingleEquationForAPrime) {
  const LinearSolution s = linear_solve({{Scalar(2)}}, {P("a + 2")});
  ASSERT_EQ(s.solution.size(), 1u);
  EXPECT_EQ(s.solution[0], P("(1/2)*a + 1"));
  EXPECT_TRUE(s.kernel_basis.empty());
}

TEST(LinearSolve, IdentityWithZeroRhs) {
  const LinearSolution s = linear_solve({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}, {MPoly(), MPoly()});
  EXPECT_TRUE(s.solution[0].is_zero());
  EXPECT_TRUE(s.solution[1].is_zero());
  EXPECT_TRUE(s.kernel_basis.empty());
}

TEST(LinearSolve, OverdeterminedConsistentConstructionSystem) {
  // Coefficients of d*l, l^2, l*m, d, l, m in the (L, Y, Y) Jacobi residual,
  // expanded by hand: each is linear in (a', b') with the same solution.
  const ScalarMatrix a{{-2, 0}, {-2, 0}, {-4, 0}, {0, -2}, {0, -2}, {0, -4}};
  const std::vector<MPoly> rhs{P("-a - 2"), P("-a - 2"), P("-2*a - 4"), P("-b"), P("-b"), P("-2*b")};
  const LinearSolution s = linear_solve(a, rhs);
  EXPECT_EQ(s.solution[0], P("(1/2)*a + 1"));
  EXPECT_EQ(s.solution[1], P("(1/2)*b"));
  EXPECT_TRUE(s.kernel_basis.empty());
}

TEST(LinearSolve, InconsistentAndKernel) {
  EXPECT_THROW(linear_solve({{Scalar(1)}, {Scalar(2)}}, {MPoly(1), MPoly(3)}), Inconsistent);
  const LinearSolution s = linear_solve({{Scalar(1), Scalar(1)}}, {P("b")});
  ASSERT_EQ(s.kernel_basis.size(), 1u);
  const ScalarVector& k = s.kernel_basis[0];
  EXPECT_EQ(k[0] + k[1], Scalar(0));
  EXPECT_FALSE(k[0].is_zero());
}

TEST(SparseEliminator, RankAndConflict) {
  SparseEliminator e(3);
  EXPECT_TRUE(e.add({{0, 1}, {1, 1}}, MPoly(1)));
  EXPECT_TRUE(e.add({{1, 1}, {2, 1}}, MPoly(2)));
  EXPECT_FALSE(e.add({{0, 1}, {2, -1}}, MPoly(-1)));
  EXPECT_FALSE(e.inconsistent());
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_FALSE(e.add({{0, 2}, {1, 2}}, MPoly(5)));
  EXPECT_TRUE(e.inconsistent());
}

TEST(LinearEquation, RejectsNonlinearUnknowns) {
  const std::map<Var, std::size_t> unknowns{{Var("u0"), 0}, {Var("u1"), 1}};
  const LinearEquation eq = linear_equation(P("2*u0 - u1 + b"), unknowns);
  EXPECT_EQ(eq.row.at(0), Scalar(2));
  EXPECT_EQ(eq.row.at(1), Scalar(-1));
  EXPECT_EQ(eq.rhs, P("-b"));
  EXPECT_THROW(linear_equation(P("u0*u1"), unknowns), Error);
  EXPECT_THROW(linear_equation(P("d*u0"), unknowns), Error);
}

}  // namespace
}  // namespace confalg
