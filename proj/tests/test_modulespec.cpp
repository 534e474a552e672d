#include "hwface/modulespec.hpp"

#include <gtest/gtest.h>

#include <string>

#include "hwface/errors.hpp"

using namespace hwface;

TEST(CoordClasses, ValueClassification) {
  EXPECT_EQ(CoordClass::ofValue(Rat(0)).kind, CoordKind::Zero);
  EXPECT_EQ(CoordClass::ofValue(Rat(5)).kind, CoordKind::DominantIntegral);
  EXPECT_EQ(CoordClass::ofValue(Rat(-2)).kind, CoordKind::NonIntegralNonzero);
  EXPECT_EQ(CoordClass::ofValue(Rat(3, 2)).kind, CoordKind::NonIntegralNonzero);
  EXPECT_EQ(CoordClass::ofValue(Rat(-1, 2)).kind, CoordKind::NonIntegralNonzero);
  EXPECT_EQ(CoordClass::zero().value, Rat(0));
  EXPECT_FALSE(CoordClass::dominantIntegral().value.has_value());
  EXPECT_FALSE(CoordClass::nonIntegral().value.has_value());
}

TEST(CoordClasses, NormalizationFoldsIntegralZero) {
  auto cs = normalizeClasses({{CoordKind::DominantIntegral, Rat(0)},
                              {CoordKind::DominantIntegral, Rat(2)}});
  EXPECT_EQ(cs[0].kind, CoordKind::Zero);
  EXPECT_EQ(cs[1].kind, CoordKind::DominantIntegral);
}

TEST(SpecSets, LambdaDerivedNodeSets) {
  RootSystem a3 = RootSystem::build("A3");
  ModuleSpec s = makeSpec(a3, {CoordClass::zero(), CoordClass::dominantIntegral(),
                               CoordClass::nonIntegral()},
                          NodeSet::of({0, 1}));
  EXPECT_EQ(jLambda(s), NodeSet::of({0, 1}));
  EXPECT_EQ(supportLambda(s), NodeSet::of({1, 2}));
  EXPECT_EQ(lambdaPerp(s), NodeSet::of({0}));
  EXPECT_FALSE(numericLambda(s).has_value());
  EXPECT_FALSE(s.polyhedralHull);
}

TEST(SpecSets, NumericLambdaWhenAllValuesKnown) {
  RootSystem a2 = RootSystem::build("A2");
  ModuleSpec s = makeNumericSpec(a2, Weight({Rat(2), Rat(-1, 2)}), NodeSet::of({0}));
  auto lam = numericLambda(s);
  ASSERT_TRUE(lam.has_value());
  EXPECT_EQ(*lam, Weight({Rat(2), Rat(-1, 2)}));
  EXPECT_EQ(jLambda(s), NodeSet::of({0}));
}

TEST(Validation, DiagnosticsNameTheProblem) {
  RootSystem a2 = RootSystem::build("A2");
  ModuleSpec bad{a2, {CoordClass::ofValue(Rat(2)), CoordClass::nonIntegral()},
                 NodeSet::of({1}), false};
  auto diags = validateDiagnostics(bad);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_NE(diags[0].find("integrable"), std::string::npos);
  EXPECT_THROW(validate(bad), InputError);

  ModuleSpec mismatch{a2, {{CoordKind::DominantIntegral, Rat(-1)},
                           {CoordKind::Zero, Rat(1)}},
                      NodeSet(), false};
  EXPECT_EQ(validateDiagnostics(mismatch).size(), 2u);

  ModuleSpec mismatch2{a2, {{CoordKind::NonIntegralNonzero, Rat(3)}, CoordClass::zero()},
                       NodeSet(), false};
  EXPECT_EQ(validateDiagnostics(mismatch2).size(), 1u);

  ModuleSpec shortLambda{a2, {CoordClass::zero()}, NodeSet(), false};
  ASSERT_EQ(validateDiagnostics(shortLambda).size(), 1u);
  EXPECT_NE(validateDiagnostics(shortLambda)[0].find("coordinates"), std::string::npos);

  ModuleSpec outside{a2, {CoordClass::zero(), CoordClass::zero()}, NodeSet::of({5}), false};
  EXPECT_FALSE(validateDiagnostics(outside).empty());
}

TEST(Presets, StandardFamilies) {
  RootSystem a2 = RootSystem::build("A2");
  std::vector<CoordClass> mixed{CoordClass::ofValue(Rat(2)), CoordClass::ofValue(Rat(-1, 2))};

  ModuleSpec verma = preset(PresetKind::Verma, a2, mixed);
  EXPECT_EQ(verma.integrable, NodeSet());
  EXPECT_TRUE(verma.polyhedralHull);

  ModuleSpec simple = preset(PresetKind::Simple, a2, mixed);
  EXPECT_EQ(simple.integrable, NodeSet::of({0}));

  ModuleSpec pv = preset(PresetKind::ParabolicVerma, a2, mixed, NodeSet());
  EXPECT_EQ(pv.integrable, NodeSet());
  EXPECT_NO_THROW(preset(PresetKind::ParabolicVerma, a2, mixed, NodeSet::of({0})));
  EXPECT_THROW(preset(PresetKind::ParabolicVerma, a2, mixed, NodeSet::of({1})), InputError);
  EXPECT_THROW(preset(PresetKind::FiniteDimensional, a2, mixed), InputError);

  ModuleSpec fd = presetNumeric(PresetKind::FiniteDimensional, a2, Weight({Rat(1), Rat(1)}));
  EXPECT_EQ(fd.integrable, a2.allNodes());
  EXPECT_TRUE(isFiniteDimensionalShape(fd));
  EXPECT_FALSE(isFiniteDimensionalShape(simple));

  // presets validate values against classes before picking the integrable set
  EXPECT_THROW(preset(PresetKind::Verma, a2,
                      {{CoordKind::Zero, Rat(1)}, CoordClass::zero()}),
               InputError);
}

TEST(Presets, AdjointShapeDetection) {
  RootSystem a2 = RootSystem::build("A2");
  ModuleSpec adj = presetNumeric(PresetKind::FiniteDimensional, a2,
                                 a2.highestRoot(a2.allNodes()));
  EXPECT_TRUE(isAdjointShape(adj));
  ModuleSpec fund = presetNumeric(PresetKind::FiniteDimensional, a2, a2.fundamentalWeight(0));
  EXPECT_FALSE(isAdjointShape(fund));
  RootSystem prod = RootSystem::build("A1xA1");
  ModuleSpec both = presetNumeric(PresetKind::FiniteDimensional, prod,
                                  Weight({Rat(2), Rat(2)}));
  EXPECT_FALSE(isAdjointShape(both));
  // Verma at the highest root is not the adjoint shape either
  ModuleSpec verma = presetNumeric(PresetKind::Verma, a2, a2.highestRoot(a2.allNodes()));
  EXPECT_FALSE(isAdjointShape(verma));
}
