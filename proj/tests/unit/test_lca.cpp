#include <gtest/gtest.h>

#include "confalg/catalog.hpp"

namespace confalg {
namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

Element gen(const std::string& f, int i, const MPoly& p = MPoly(1)) { return Element::of({f, i}, p); }
LambdaPoly lam(const std::string& f, int i, const MPoly& p) { return LambdaPoly::of({f, i}, p); }

const AlgebraSpec& csv() {
  static const AlgebraSpec spec = build_csv(MPoly(params::a), MPoly(params::b));
  return spec;
}

TEST(Bracket, LLFromTemplate) { EXPECT_EQ(bracket(csv(), gen("L", 0), gen("L", 3)), lam("L", 3, P("d + 2*l"))); }

TEST(Bracket, SesquilinearInFirstArgument) {
  EXPECT_EQ(bracket(csv(), gen("L", 0, P("d")), gen("L", 0)), lam("L", 0, P("-l*(d + 2*l)")));
}

TEST(Bracket, SesquilinearInSecondArgument) {
  EXPECT_EQ(bracket(csv(), gen("L", 0), gen("L", 0, P("d"))), lam("L", 0, P("(d + l)*(d + 2*l)")));
}

TEST(Bracket, YYLandsInM) { EXPECT_EQ(bracket(csv(), gen("Y", 1), gen("Y", 2)), lam("M", 3, P("d + 2*l"))); }

TEST(Bracket, MYVanishes) { EXPECT_TRUE(bracket(csv(), gen("M", 0), gen("Y", 5)).is_zero()); }

TEST(Bracket, UnknownFamilyThrows) { EXPECT_THROW(bracket(csv(), gen("Q", 0), gen("L", 0)), UnknownFamily); }

TEST(Helpers, OuterShift) { EXPECT_EQ(shift_outer(P("d + m"), P("l")), P("d + l + m")); }

TEST(Helpers, ArgumentEvaluation) {
  EXPECT_EQ(evaluate_argument(P("d + 2*l"), P("l + m")), P("l - m"));
  EXPECT_EQ(evaluate_argument(P("b"), P("l + m")), P("b"));
}

TEST(Skew, HoldsOnCsv) {
  EXPECT_TRUE(check_skew(csv(), "L", "L").is_zero());
  EXPECT_TRUE(check_skew(csv(), "Y", "Y").is_zero());
  EXPECT_TRUE(check_skew(csv(), "L", "Y").is_zero());
}

TEST(Skew, DetectsPerturbedReversePair) {
  AlgebraSpec bad = csv();
  std::vector<BracketTerm> ml = bad.entry("M", "L");
  ASSERT_EQ(ml.size(), 1u);
  ml[0].coeff += MPoly(1);
  bad.set_bracket("M", "L", ml);
  EXPECT_FALSE(check_skew(bad, "L", "M").is_zero());
}

TEST(Jacobi, LYYOnCsvVanishes) { EXPECT_TRUE(check_jacobi(csv(), "L", "Y", "Y").is_zero()); }

TEST(Jacobi, VirasoroTriple) { EXPECT_TRUE(check_jacobi(build_cw(), "L", "L", "L").is_zero()); }

TEST(Jacobi, PerturbedAPrimeBreaksLYY) {
  const MPoly a(params::a), b(params::b);
  const AlgebraSpec bad = build_construction(a, P("(1/2)*a + 2"), b, P("(1/2)*b"));
  EXPECT_FALSE(check_jacobi(bad, "L", "Y", "Y").is_zero());
}

TEST(AllAxioms, CsvAndChvSymbolic) {
  EXPECT_TRUE(check_all_axioms(csv()).all_zero());
  EXPECT_TRUE(check_all_axioms(csv(), true).all_zero());
  EXPECT_TRUE(check_all_axioms(build_chv(MPoly(params::a), MPoly(params::b)), true).all_zero());
  const AxiomReport r = check_all_axioms(csv());
  EXPECT_EQ(r.skew.size(), 6u);
  EXPECT_EQ(r.jacobi.size(), 10u);
}

TEST(AllAxioms, FreeConstructionFailsOnlyOnLYYOrderings) {
  const AxiomReport r = check_all_axioms(build_named("mfam", MPoly(params::a), MPoly(params::b)), true);
  for (const auto& s : r.skew) EXPECT_TRUE(s.residual.is_zero()) << s.a << s.b;
  std::set<std::string> failing;
  for (const auto& j : r.jacobi) {
    if (!j.residual.is_zero()) failing.insert(j.a + j.b + j.c);
  }
  EXPECT_EQ(failing, (std::set<std::string>{"LYY", "YLY", "YYL"}));
}

TEST(Grading, ProjectKeepsOneIndex) {
  const Element x = gen("L", 1) + gen("M", 2);
  EXPECT_EQ(grading_project(x, 1), gen("L", 1));
  EXPECT_TRUE(grading_project(Element(), 4).is_zero());
  EXPECT_EQ(grading_project(x, 1) + grading_project(x, 2), x);
}

TEST(Text, AlgebraRoundTrip) {
  const AlgebraSpec spec = build_csv(P("1/2"), MPoly(params::b));
  EXPECT_EQ(algebra_from_text(to_text(spec)), spec);
  EXPECT_THROW(algebra_from_text("algebra x\nfamilies L\nbracket L L -> L : d +"), ParseError);
}

}  // namespace
}  // namespace confalg
