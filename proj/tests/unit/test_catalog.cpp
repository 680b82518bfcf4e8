#include <gtest/gtest.h>

#include "confalg/catalog.hpp"
#include "confalg/random.hpp"

namespace confalg {
namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

// [L l [Y m Y]] - [[L l Y]_{l+m} Y] - [Y m [L l Y]] for M(a, a', b, b'),
// expanded by hand from the four templates; the result multiplies M.
MPoly lyy_residual_by_hand(const MPoly& a, const MPoly& ap, const MPoly& b, const MPoly& bp) {
  const MPoly d(vars::d), l(vars::lambda), m(vars::mu);
  const MPoly first = (d + l + 2 * m) * (d + a * l + b);
  const MPoly second = (-(l + m) + ap * l + bp) * (d + 2 * (l + m));
  const MPoly third = (d + m + ap * l + bp) * (d + 2 * m);
  return first - second - third;
}

TEST(Catalog, CsvTemplates) {
  EXPECT_EQ(build_csv(MPoly(1), MPoly(0)).entry("L", "Y").at(0).coeff, P("d + (3/2)*l"));
  EXPECT_EQ(build_csv(MPoly(0), MPoly(0)).entry("L", "M").at(0).coeff, P("d"));
  EXPECT_EQ(build_cw().entry("L", "L").at(0).coeff, P("d + 2*l"));
}

TEST(Catalog, ChvIsLMRestriction) {
  const AlgebraSpec chv = build_chv(MPoly(1), MPoly(0));
  EXPECT_EQ(chv.families, (std::vector<std::string>{"L", "M"}));
  EXPECT_EQ(chv.entry("L", "M").at(0).coeff, P("d + l"));
  EXPECT_TRUE(chv.entry("M", "M").empty());
  EXPECT_TRUE(check_all_axioms(chv, true).all_zero());
  EXPECT_TRUE(check_all_axioms(build_csv(MPoly(1), MPoly(0)), true).all_zero());
}

TEST(Catalog, NamedIndexZeroVariants) {
  for (const char* id : {"sv", "hv", "cvir"}) {
    const AlgebraSpec s = build_named(id, MPoly(params::a), MPoly(params::b));
    EXPECT_EQ(s.indices, IndexRange::zero_only) << id;
    EXPECT_TRUE(check_all_axioms(s).all_zero()) << id;
  }
  EXPECT_THROW(build_named("nope", MPoly(), MPoly()), Error);
}

TEST(Construction, ReducesToCsvOnLocus) {
  const MPoly a(params::a), b(params::b);
  AlgebraSpec m = build_construction(a, P("(1/2)*a + 1"), b, P("(1/2)*b"));
  const AlgebraSpec csv = build_csv(a, b);
  EXPECT_EQ(m.table, csv.table);
  EXPECT_EQ(m.families, csv.families);
}

TEST(Construction, JacobiResidualMatchesHandExpansion) {
  const MPoly a(params::a), ap(params::a_prime), b(params::b), bp(params::b_prime);
  const LambdaPoly r = check_jacobi(build_construction(a, ap, b, bp), "L", "Y", "Y");
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms().begin()->first.family, "M");
  EXPECT_EQ(r.terms().begin()->second, lyy_residual_by_hand(a, ap, b, bp));
  const VarSet dlm{vars::d, vars::lambda, vars::mu};
  EXPECT_EQ(coeff_extract(r.terms().begin()->second, dlm, Monomial{{vars::d, 1}, {vars::lambda, 1}}),
            P("a + 1 - (2*a' - 1)"));
}

TEST(Construction, OffLocusPointFailsJacobi) {
  const LambdaPoly r = check_jacobi(build_construction(MPoly(0), MPoly(0), MPoly(0), MPoly(1)), "L", "Y", "Y");
  ASSERT_FALSE(r.is_zero());
  const MPoly res = r.terms().begin()->second;
  EXPECT_EQ(res, lyy_residual_by_hand(MPoly(0), MPoly(0), MPoly(0), MPoly(1)));
  // 2 (l - 1)(d + l + 2 m): zero at d = l = m = 1, so probe another point.
  EXPECT_EQ(res, P("2*(l - 1)*(d + l + 2*m)"));
  EXPECT_EQ(evaluate(res, {{vars::d, 1}, {vars::lambda, 2}, {vars::mu, 1}}), Scalar(10));
}

TEST(SolveConstruction, RecoversUniqueParameters) {
  const ConstructionSolution s = solve_construction();
  EXPECT_EQ(s.a_prime, P("(1/2)*a + 1"));
  EXPECT_EQ(s.b_prime, P("(1/2)*b"));
  EXPECT_EQ(s.equations.size(), 6u);
  EXPECT_TRUE(check_all_axioms(build_construction(MPoly(params::a), s.a_prime, MPoly(params::b), s.b_prime), true)
                  .all_zero());
}

TEST(SolveConstruction, TwoCoefficientsSuffice) {
  const std::vector<Monomial> only{Monomial{{vars::d, 1}, {vars::lambda, 1}}, Monomial{{vars::d, 1}}};
  const ConstructionSolution s = solve_construction(&only);
  EXPECT_EQ(s.equations_used, 2u);
  EXPECT_EQ(s.a_prime, P("(1/2)*a + 1"));
  EXPECT_EQ(s.b_prime, P("(1/2)*b"));
}

TEST(SolveConstruction, OneCoefficientIsNotEnough) {
  const std::vector<Monomial> only{Monomial{{vars::d, 1}, {vars::lambda, 1}}};
  EXPECT_THROW(solve_construction(&only), Error);
}

TEST(SolveConstruction, NecessityOnRandomOffLocusPoints) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    Scalar ap = random_scalar(rng, 5, true), bp = random_scalar(rng, 5, true);
    if (ap == a / Scalar(2) + Scalar(1) && bp == b / Scalar(2)) bp += Scalar(1);
    EXPECT_FALSE(check_jacobi(build_construction(a, ap, b, bp), "L", "Y", "Y").is_zero()) << k;
  }
}

TEST(Subalgebra, ClosureScan) {
  const AlgebraSpec csv = build_csv(MPoly(params::a), MPoly(params::b));
  const AlgebraSpec chv = build_chv(MPoly(params::a), MPoly(params::b));
  EXPECT_TRUE(subalgebra_check(csv, build_cw()));
  EXPECT_TRUE(subalgebra_check(csv, build_hv(MPoly(params::a), MPoly(params::b))));
  EXPECT_TRUE(subalgebra_check(chv, build_cvir()));
  EXPECT_TRUE(subalgebra_check(csv, restrict_algebra(csv, {"M", "Y"})));
  EXPECT_FALSE(subalgebra_check(csv, restrict_algebra(csv, {"L", "Y"})));
  EXPECT_FALSE(subalgebra_check(csv, build_csv(MPoly(1), MPoly(0))));
}

LieElement lie(const std::string& f, int i) { return {{Generator{f, i}, Scalar(1)}}; }

TEST(Tsv, BracketsAndJacobi) {
  const LieAlgebraSpec tsv = build_tsv_lie();
  for (int n = -3; n <= 3; ++n) {
    LieElement expect;
    if (n != 0) expect[{"M", n}] = Scalar(n);
    EXPECT_EQ(lie_bracket(tsv, lie("L", 0), lie("M", n)), expect) << n;
  }
  EXPECT_TRUE(lie_bracket(tsv, lie("Y", 2), lie("Y", 2)).empty());
  EXPECT_TRUE(lie_bracket(tsv, lie("L", 2), lie("Y", 1)).empty());
  EXPECT_EQ(lie_bracket(tsv, lie("L", 2), lie("Y", 3)), (LieElement{{{"Y", 5}, Scalar(2)}}));
  EXPECT_EQ(lie_bracket(tsv, lie("Y", 1), lie("Y", 4)), (LieElement{{{"M", 5}, Scalar(3)}}));
  const LieCheckReport r = lie_jacobi_check(tsv, 5);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.jacobi_checks, 33u * 33u * 33u);
}

}  // namespace
}  // namespace confalg
