#include <gtest/gtest.h>

#include "confalg/catalog.hpp"
#include "confalg/classify.hpp"
#include "confalg/random.hpp"

namespace confalg {
namespace {

MPoly P(const char* text) { return MPoly::parse(text); }

const MPoly alpha(mparams::alpha), beta(mparams::beta), cc(mparams::c), dext(mparams::dext);

AlgebraSpec csv(const MPoly& a, const MPoly& b) { return build_csv(a, b); }
AlgebraSpec csv_sym() { return build_csv(MPoly(params::a), MPoly(params::b)); }

TEST(Rank1, ExtensionActionIsDTimesCPower) {
  const ModuleSpec mod = build_rank1(csv(0, 0), 1, 0, 2, 3);
  EXPECT_EQ(mod.action("Y", 2, 0), MPoly(12));
  EXPECT_EQ(mod.action("L", 2, 0), P("4*d + 4*l"));
  EXPECT_TRUE(mod.action("M", 2, 0).is_zero());
  EXPECT_EQ(mod.params.extension_family, "Y");
}

TEST(Rank1, ZeroExtensionLeavesOnlyL) {
  const ModuleSpec mod = build_rank1(csv_sym(), alpha, beta, cc, MPoly());
  for (int i = mod.generators.lo; i <= mod.generators.hi; ++i) {
    EXPECT_TRUE(mod.action("M", i, 0).is_zero());
    EXPECT_TRUE(mod.action("Y", i, 0).is_zero());
  }
  EXPECT_EQ(mod.generators, (Window{0, 2}));
}

TEST(Rank1, ZeroCKillsPositiveIndices) {
  const ModuleSpec mod = build_rank1(csv_sym(), alpha, beta, MPoly(0), MPoly());
  EXPECT_EQ(mod.action("L", 0, 0), P("d + alpha*l + beta"));
  EXPECT_TRUE(mod.action("L", 1, 0).is_zero());
  EXPECT_TRUE(mod.action("L", 2, 0).is_zero());
}

TEST(Rank1, NonzeroNumericCUsesSymmetricWindow) {
  const ModuleSpec mod = build_rank1(csv_sym(), alpha, beta, MPoly(2), MPoly());
  EXPECT_EQ(mod.generators, (Window{-2, 2}));
  EXPECT_EQ(mod.action("L", -1, 0), P("(1/2)*(d + alpha*l + beta)"));
}

TEST(Rank1, ExtensionOverChvUsesM) {
  const ModuleSpec mod = build_rank1(build_chv(1, 0), alpha, beta, 3, dext);
  EXPECT_EQ(mod.params.extension_family, "M");
  EXPECT_EQ(mod.action("M", 2, 0), P("9*dext"));
}

TEST(Graded, VabAction) {
  const ModuleSpec mod = build_graded_ab(csv_sym(), 2, 1, MPoly());
  EXPECT_EQ(mod.action("L", 2, 0), P("d + 2*l + 1"));
  EXPECT_EQ(mod.target(2, 0), 2);
  EXPECT_THROW(mod.action("L", 3, 0), WindowTooSmall);
}

TEST(Graded, BitSequenceCases) {
  EXPECT_EQ(bitseq_action(0, 1, beta), MPoly(1));
  EXPECT_EQ(bitseq_action(1, 0, beta), P("(d + beta)*(d + beta + l)"));
  EXPECT_EQ(bitseq_action(0, 0, beta), P("d + beta"));
  EXPECT_EQ(bitseq_action(1, 1, beta), P("d + beta + l"));
}

TEST(Graded, BitSequenceBuilderUsesCaseSplit) {
  // bits at -5..5: a_0 = 0, a_1 = 1, a_2 = 1
  const BitSeq bits = BitSeq::from_string(-5, "00000011000");
  ASSERT_EQ(bits.at(0), 0);
  ASSERT_EQ(bits.at(1), 1);
  const ModuleSpec mod = build_graded_Ab(csv_sym(), bits, beta, MPoly());
  EXPECT_EQ(mod.action("L", 1, 0), MPoly(1));
  EXPECT_EQ(mod.action("L", -1, 1), P("(d + beta)*(d + beta + l)"));
  EXPECT_EQ(mod.action("L", 1, 1), P("d + beta + l"));
  EXPECT_EQ(mod.action("L", -2, 0), P("d + beta"));
  EXPECT_THROW(build_graded_Ab(csv_sym(), BitSeq::from_string(0, "0101"), beta, MPoly()), WindowTooSmall);
}

TEST(Graded, ActionsLandInShiftedIndex) {
  Rng rng(3);
  const ModuleSpec mod = build_graded_Ab(csv(0, 0), BitSeq::random({-5, 5}, rng), beta, dext);
  ASSERT_FALSE(mod.table.empty());
  for (const auto& [key, p] : mod.table) {
    const auto& [fam, i, m] = key;
    EXPECT_EQ(mod.target(i, m), i + m) << fam << i << m;
  }
  const ModuleSpec rank1 = build_rank1(csv(0, 0), 1, 2, 3, dext);
  for (int i = -2; i <= 2; ++i) EXPECT_EQ(rank1.target(i, 0), 0);
}

TEST(ModuleAxioms, RankOneOverAnyCsv) {
  EXPECT_TRUE(check_module_axioms(csv_sym(), build_rank1(csv_sym(), alpha, beta, cc, MPoly())).all_zero());
  EXPECT_TRUE(check_module_axioms(csv(0, 0), build_rank1(csv(0, 0), alpha, beta, cc, dext)).all_zero());
}

TEST(ModuleAxioms, ExtensionOverCsvOneOneFails) {
  const ModuleAxiomReport r = check_module_axioms(csv(1, 1), build_rank1(csv(1, 1), alpha, beta, cc, dext));
  ASSERT_FALSE(r.all_zero());
  const MPoly& res = r.nonzero.front().residual;
  EXPECT_TRUE(res.involves(mparams::dext));
  EXPECT_TRUE(substitute(res, mparams::dext, MPoly()).is_zero());
  const std::map<Var, Scalar> point{{vars::d, 2},   {vars::lambda, 3}, {vars::mu, 5},     {mparams::alpha, 7},
                                    {mparams::beta, 11}, {mparams::c, 13}, {mparams::dext, 17}};
  EXPECT_FALSE(evaluate(res, point).is_zero());
}

TEST(ModuleAxioms, ExtendedVabOverCsvZeroZero) {
  const ModuleSpec mod = build_graded_ab(csv(0, 0), alpha, beta, dext);
  EXPECT_TRUE(check_module_axioms(csv(0, 0), mod).all_zero());
  EXPECT_TRUE(relations_oracle(0, 0, mod).all_zero());
  EXPECT_FALSE(check_module_axioms(csv(1, 0), build_graded_ab(csv(1, 0), alpha, beta, dext)).all_zero());
}

TEST(ModuleAxioms, ExtendedNonConstantSequenceBreaksLYAxiom) {
  // a_0 = 0, a_1 = 1: L_1 on v_0 is 1, so L_1 (Y_0 v_0) - Y_0 (L_1 v_0) = 0
  // while [L_1 Y_0] acts by -m * dext.
  const BitSeq bits = BitSeq::from_string(-5, "00000011111");
  const ModuleSpec mod = build_graded_Ab(csv(0, 0), bits, beta, dext);
  const ModuleAxiomReport r = check_module_axioms(csv(0, 0), mod);
  ASSERT_FALSE(r.all_zero());
  bool found = false;
  for (const auto& f : r.nonzero) {
    if (f.a == "L" && f.b == "Y" && f.i == 1 && f.j == 0 && f.k == 0) {
      EXPECT_EQ(f.residual, P("m*dext"));
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(check_module_axioms(csv(0, 0), build_graded_Ab(csv(0, 0), bits, beta, MPoly())).all_zero());
  EXPECT_TRUE(check_module_axioms(csv(0, 0), build_graded_Ab(csv(0, 0), BitSeq::constant({-5, 5}, 1), beta, dext))
                  .all_zero());
}

TEST(Relations, ConstantGWithDerivationDependentH) {
  ModuleSpec mod = build_graded_ab(csv(1, 0), alpha, beta, MPoly());
  mod.families = {"L", "M", "Y"};
  const MPoly e = MPoly::var("e");
  for (int i = mod.generators.lo; i <= mod.generators.hi; ++i) {
    for (int m = mod.basis.lo; m <= mod.basis.hi; ++m) {
      if (!mod.basis.contains(i + m)) continue;
      mod.set_action("M", i, m, e);
      mod.set_action("Y", i, m, MPoly(vars::d));
    }
  }
  const RelationResiduals r = relations_oracle(1, 0, mod);
  EXPECT_GT(r.nonzero.count("YY"), 0u);
  EXPECT_GT(r.nonzero.count("MY"), 0u);
  EXPECT_EQ(r.nonzero.count("MM"), 0u);
  EXPECT_EQ(r.first.at("MY"), P("e*l"));
  EXPECT_FALSE(check_module_axioms(csv(1, 0), mod).all_zero());
}

TEST(Relations, ZeroCoefficientsSatisfyEverything) {
  const ModuleSpec mod = build_graded_ab(csv_sym(), alpha, beta, MPoly());
  const RelationResiduals r = relations_oracle(MPoly(params::a), MPoly(params::b), mod);
  EXPECT_TRUE(r.all_zero());
  EXPECT_GT(r.checked, 0u);
}

TEST(Relations, AgreeWithModuleAxiomOnRandomModules) {
  Rng rng(11);
  std::uniform_int_distribution<int> pick(0, 4);
  for (int k = 0; k < 20; ++k) {
    const Scalar a = pick(rng) == 0 ? Scalar(0) : random_scalar(rng);
    const Scalar b = pick(rng) == 0 ? Scalar(0) : random_scalar(rng);
    const MPoly d = pick(rng) < 2 ? MPoly() : MPoly(random_nonzero_scalar(rng));
    const AlgebraSpec alg = csv(a, b);
    const ModuleSpec mod = k % 2 == 0 ? build_graded_ab(alg, random_scalar(rng), random_scalar(rng), d)
                                      : build_graded_Ab(alg, BitSeq::random({-5, 5}, rng), random_scalar(rng), d);
    EXPECT_EQ(check_module_axioms(alg, mod).all_zero(), relations_oracle(a, b, mod).all_zero()) << k;
  }
}

TEST(ClassifyRank1, ExtensionOnlyWhereExpected) {
  const Rank1Classification c00 = classify_rank1("csv", 0, 0);
  EXPECT_EQ(c00.outcome, ExtensionOutcome::extension);
  EXPECT_EQ(c00.extension_family, "Y");
  EXPECT_EQ(c00.extension_action, P("ci*dext"));
  EXPECT_TRUE(c00.other_action.is_zero());
  for (const auto& s : c00.steps) EXPECT_TRUE(s.holds) << s.id;

  EXPECT_EQ(classify_rank1("csv", 1, 0).outcome, ExtensionOutcome::none);
  EXPECT_EQ(classify_rank1("csv", 2, 5).outcome, ExtensionOutcome::none);
  EXPECT_EQ(classify_rank1("chv", 0, 0).outcome, ExtensionOutcome::none);
  const Rank1Classification h10 = classify_rank1("chv", 1, 0);
  EXPECT_EQ(h10.outcome, ExtensionOutcome::extension);
  EXPECT_EQ(h10.extension_family, "M");
  EXPECT_THROW(classify_rank1("cw", 0, 0), Error);
}

TEST(ClassifyGraded, VabBases) {
  GradedBase base;
  base.alpha = Scalar::fraction(3, 2);
  base.beta = Scalar(-2);
  const GradedClassification c00 = classify_graded("csv", 0, 0, base);
  EXPECT_EQ(c00.outcome, ExtensionOutcome::extension);
  EXPECT_TRUE(c00.other_family_zero);
  ASSERT_TRUE(c00.solution);
  EXPECT_TRUE(check_module_axioms(csv(0, 0), *c00.solution).all_zero());
  EXPECT_EQ(classify_graded("csv", 1, 0, base).outcome, ExtensionOutcome::none);
  EXPECT_EQ(classify_graded("chv", 1, 0, base).outcome, ExtensionOutcome::extension);
  EXPECT_EQ(classify_graded("chv", 0, 0, base).outcome, ExtensionOutcome::none);
}

TEST(Witness, AlphaZeroHasLinearWitness) {
  const ModuleSpec mod = build_rank1(csv(0, 0), 0, 5, 1, 0);
  const WitnessResult w = reducibility_witness(mod, 3);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(*w.witness, P("d + 5"));
  // q(d + l) * (d + beta) is divisible by q(d) after the shift
  EXPECT_EQ(divide_exact(substitute(*w.witness, vars::d, P("d + l")) * P("d + 5"), *w.witness), P("d + l + 5"));
}

TEST(Witness, DisappearsWithExtension) {
  EXPECT_FALSE(reducibility_witness(build_rank1(csv(0, 0), 0, 5, 1, 2), 3).witness);
}

TEST(Witness, NoneForNonzeroAlpha) {
  const WitnessResult w = reducibility_witness(build_rank1(csv(0, 0), 1, 0, 1, 0), 3);
  EXPECT_FALSE(w.witness);
  EXPECT_FALSE(w.trivial_module);
  EXPECT_EQ(w.searched_degree, 3u);
}

TEST(Witness, ZeroCIsFlagged) {
  const WitnessResult w = reducibility_witness(build_rank1(csv(0, 0), 1, 0, 0, 0), 3);
  EXPECT_TRUE(w.trivial_module);
  EXPECT_FALSE(w.witness);
  EXPECT_FALSE(w.notes.empty());
}

TEST(Witness, SymbolicParametersRejected) {
  EXPECT_THROW(reducibility_witness(build_rank1(csv(0, 0), alpha, 0, 1, 0), 2), Error);
}

TEST(Text, ModuleRoundTrip) {
  Rng rng(5);
  const ModuleSpec a = build_graded_Ab(csv(0, 0), BitSeq::random({-5, 5}, rng), P("1/2"), dext);
  EXPECT_EQ(module_from_text(to_text(a)), a);
  const ModuleSpec b = build_rank1(csv_sym(), alpha, beta, cc, MPoly());
  EXPECT_EQ(module_from_text(to_text(b)), b);
}

}  // namespace
}  // namespace confalg
