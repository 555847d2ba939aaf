#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "collin/diagnostics.hpp"
#include "collin/fixtures.hpp"

using namespace collin;

namespace {

DesignMatrix theil() { return design_matrix(fixture("theil")); }
DesignMatrix kg() { return design_matrix(fixture("kg")); }

void expect_rel(double got, double want, double rel) {
  EXPECT_NEAR(got, want, rel * std::abs(want)) << "want " << want;
}

}  // namespace

TEST(CorrelationMatrix, TheilExcludesDummy) {
  const auto r = correlation_matrix(theil());
  ASSERT_EQ(r.labels, (std::vector<std::string>{"income", "relprice"}));
  EXPECT_NEAR(r.r(0, 1), 0.1788467, 1e-6);
  EXPECT_NEAR(r.det, 0.9680139, 1e-6);
  EXPECT_FALSE(r.det_problematic);
  EXPECT_FALSE(r.pairwise_problematic);
}

TEST(CorrelationMatrix, KleinGoldbergerFlagsDeterminant) {
  const auto r = correlation_matrix(kg());
  EXPECT_NEAR(r.r(0, 1), 0.9431118, 1e-6);
  EXPECT_NEAR(r.r(0, 2), 0.8106989, 1e-6);
  EXPECT_NEAR(r.r(1, 2), 0.7371272, 1e-6);
  EXPECT_NEAR(r.det, 0.03713592, 1e-7);
  EXPECT_NEAR(r.det_threshold, 0.06098764, 1e-12);
  EXPECT_TRUE(r.det_problematic);
  EXPECT_TRUE(r.flagged_pairs.empty());  // 0.9431 is below sqrt(0.9)
}

TEST(CorrelationMatrix, OrthogonalCenteredColumns) {
  const Matrix x{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
  const auto r = correlation_matrix(DesignMatrix(x, true, {}));
  EXPECT_NEAR(r.r(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(r.det, 1.0, 1e-15);
}

TEST(CorrelationMatrix, NeedsTwoQuantitative) {
  const auto x = theil().subset(std::vector<std::size_t>{0, 1, 3});
  try {
    correlation_matrix(x);
    FAIL();
  } catch (const NotApplicable& e) {
    EXPECT_STREQ(e.what(), guidance::kTwoQuantitative);
  }
}

TEST(Vif, PublishedValues) {
  const auto t = vif(theil());
  ASSERT_EQ(t.size(), 2u);
  expect_rel(t[0].value, 1.033043, 1e-5);
  expect_rel(t[1].value, 1.033043, 1e-5);
  const auto k = vif(kg());
  expect_rel(k[0].value, 12.296544, 1e-5);
  expect_rel(k[1].value, 9.230073, 1e-5);
  expect_rel(k[2].value, 2.976638, 1e-5);
  EXPECT_EQ(k[0].label, "wage.income");
}

TEST(Vif, OrthogonalRegressorsAreOne) {
  const Matrix x{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
  for (const auto& v : vif(DesignMatrix(x, true, {}))) EXPECT_NEAR(v.value, 1.0, 1e-14);
}

TEST(Vif, SingularNamesWorstPair) {
  const Matrix x{{1, 1, 2, 5}, {1, 2, 4, 1}, {1, 3, 6, 2}, {1, 4, 8, 7}, {1, 5, 10, 3}};
  try {
    vif(DesignMatrix(x, true, {}, {"(Intercept)", "a", "b", "c"}));
    FAIL();
  } catch (const SingularMatrixError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("a, b"), std::string::npos) << msg;
  }
}

TEST(ConditionNumber, PublishedValues) {
  expect_rel(condition_number(theil(), true), 53.39671, 1e-4);
  expect_rel(condition_number(kg(), false), 30.2987, 1e-4);
  expect_rel(condition_number(kg(), true), 35.88644, 1e-4);
}

TEST(ConditionNumber, SingleColumnIsOne) {
  const Matrix x{{3.0}, {4.0}, {12.0}};
  EXPECT_NEAR(condition_number(DesignMatrix(x, false, {}), true), 1.0, 1e-15);
}

TEST(ConditionNumber, ExactCollinearityThrows) {
  const Matrix x{{1, 1, 2}, {1, 2, 4}, {1, 3, 6}, {1, 4, 8.0}};
  EXPECT_THROW(condition_number(DesignMatrix(x, true, {}), true), SingularMatrixError);
}

TEST(Cns, PublishedValues) {
  const auto t = cns(theil());
  expect_rel(t.cn_without, 24.15423, 1e-4);
  expect_rel(t.cn_with, 53.39671, 1e-4);
  expect_rel(t.increase_pct, 54.76458, 1e-4);
  const auto k = cns(kg());
  expect_rel(k.cn_without, 30.2987, 1e-4);
  expect_rel(k.cn_with, 35.88644, 1e-4);
  expect_rel(k.increase_pct, 15.57062, 1e-4);
}

TEST(Cns, OrthonormalCenteredColumnsGiveNoIncrease) {
  // Centered, equal-norm, mutually orthogonal regressors; the intercept has the same norm.
  const Matrix x{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
  const auto r = cns(DesignMatrix(x, true, {}));
  EXPECT_NEAR(r.cn_without, 1.0, 1e-12);
  EXPECT_NEAR(r.cn_with, 1.0, 1e-12);
  EXPECT_NEAR(r.increase_pct, 0.0, 1e-10);
}

TEST(Cns, NeedsIntercept) {
  EXPECT_THROW(cns(theil().without_intercept()), NotApplicable);
}

TEST(Stewart, Theil) {
  const auto s = stewart_index(theil());
  ASSERT_EQ(s.k2.size(), 3u);
  expect_rel(s.k2[0].value, 403.20963, 1e-4);
  expect_rel(s.k2[1].value, 415.28266, 1e-4);
  expect_rel(s.k2[2].value, 23.50258, 1e-4);
  expect_rel(s.essential_pct[0].value, 0.2487566, 1e-4);
  expect_rel(s.essential_pct[1].value, 4.3954455, 1e-4);
  expect_rel(s.nonessential_pct[0].value, 99.75124, 1e-4);
  expect_rel(s.nonessential_pct[1].value, 95.60455, 1e-4);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(s.essential_pct[i].value + s.nonessential_pct[i].value, 100.0);
}

TEST(Stewart, KleinGoldberger) {
  const auto s = stewart_index(kg());
  const std::vector<double> k2{17.86327, 185.96422, 156.50013, 39.16836};
  const std::vector<double> ess{6.612317, 5.897805, 7.599598};
  const std::vector<double> noness{93.38768, 94.10219, 92.40040};
  for (std::size_t i = 0; i < 4; ++i) expect_rel(s.k2[i].value, k2[i], 1e-4);
  for (std::size_t i = 0; i < 3; ++i) {
    expect_rel(s.essential_pct[i].value, ess[i], 1e-4);
    expect_rel(s.nonessential_pct[i].value, noness[i], 1e-4);
    EXPECT_EQ(s.essential_pct[i].value + s.nonessential_pct[i].value, 100.0);
  }
}

TEST(Stewart, ZeroMeanOrthogonalRegressorHasUnitIndex) {
  const Matrix x{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
  const auto s = stewart_index(DesignMatrix(x, true, {}));
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_NEAR(s.k2[i].value, 1.0, 1e-14);
    EXPECT_NEAR(s.essential_pct[i - 1].value, 100.0, 1e-12);
  }
}

TEST(CoefficientOfVariation, TheilColumnsAgainstHandSummation) {
  const Dataset d = fixture("theil");
  for (const auto& [label, expected] : {std::pair{"income", 0.04993766}, std::pair{"relprice", 0.2144185}}) {
    const Vector& v = d.column(label).values;
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / 17.0;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double oracle = std::sqrt(ss / 17.0) / std::abs(mean);
    EXPECT_NEAR(coefficient_of_variation(v), oracle, 1e-15);
    expect_rel(coefficient_of_variation(v), expected, 1e-6);
  }
}

TEST(CoefficientOfVariation, KleinGoldberger) {
  const Dataset d = fixture("kg");
  expect_rel(coefficient_of_variation(d.column("wage.income").values), 0.2660921, 1e-6);
  expect_rel(coefficient_of_variation(d.column("non.farm.income").values), 0.2503487, 1e-6);
  expect_rel(coefficient_of_variation(d.column("farm.income").values), 0.2867863, 1e-6);
}

TEST(CoefficientOfVariation, ConstantAndCentered) {
  EXPECT_EQ(coefficient_of_variation(Vector{3.0, 3.0, 3.0}), 0.0);
  EXPECT_THROW(coefficient_of_variation(Vector{-1.0, 0.0, 1.0}), NotApplicable);
}

TEST(ProportionOfOnes, Values) {
  expect_rel(proportion_of_ones(fixture("theil").column("twenties").values), 41.17647, 1e-6);
  EXPECT_EQ(proportion_of_ones(Vector{1, 1, 1}), 100.0);
  EXPECT_EQ(proportion_of_ones(Vector{0, 0, 0}), 0.0);
  EXPECT_THROW(proportion_of_ones(Vector{0, 2, 1}), DataError);
}

TEST(Slm, TheilQuantitativeModels) {
  const auto inc = slm(theil().subset(std::vector<std::size_t>{0, 1}));
  EXPECT_FALSE(inc.dummy);
  expect_rel(*inc.cv, 0.04993766, 1e-4);
  EXPECT_EQ(*inc.vif, 1.0);
  expect_rel(inc.cn, 40.07489, 1e-4);
  ASSERT_EQ(inc.k2.size(), 2u);
  expect_rel(inc.k2[0], 401.9994, 1e-4);
  expect_rel(inc.k2[1], 401.9994, 1e-4);
  EXPECT_NEAR(inc.k2[0], inc.k2[1], 1e-9 * inc.k2[0]);

  const auto rel = slm(theil().subset(std::vector<std::size_t>{0, 2}));
  expect_rel(*rel.cv, 0.2144185, 1e-4);
  expect_rel(rel.cn, 9.43356, 1e-4);
  expect_rel(rel.k2[0], 22.75082, 1e-4);
}

TEST(Slm, TheilDummyModel) {
  const auto d = slm(theil().subset(std::vector<std::size_t>{0, 3}));
  EXPECT_TRUE(d.dummy);
  expect_rel(*d.ones_pct, 41.17647, 1e-4);
  expect_rel(d.cn, 2.140501, 1e-4);
  EXPECT_FALSE(d.cv.has_value());
  EXPECT_TRUE(d.k2.empty());
}

TEST(Slm, FullModelRejected) {
  try {
    slm(kg());
    FAIL();
  } catch (const NotApplicable& e) {
    EXPECT_STREQ(e.what(), "Only 2 independent variables are needed (including the intercept)");
  }
}

TEST(Multicol, TheilMatchesIndividualMeasures) {
  const auto x = theil();
  const auto r = multicol(x);
  EXPECT_FALSE(r.simple_model.has_value());
  const auto& cv = std::get<std::vector<LabeledValue>>(r.cv);
  ASSERT_EQ(cv.size(), 2u);
  expect_rel(cv[0].value, 0.04993766, 1e-6);
  expect_rel(cv[1].value, 0.21441845, 1e-6);
  const auto& ones = std::get<std::vector<LabeledValue>>(r.ones_pct);
  expect_rel(ones[0].value, 41.17647, 1e-6);
  EXPECT_EQ(std::get<CorrelationReport>(r.correlation), correlation_matrix(x));
  EXPECT_EQ(std::get<std::vector<LabeledValue>>(r.vif), vif(x));
  EXPECT_EQ(std::get<CnReport>(r.cn), cns(x));
  EXPECT_EQ(std::get<StewartReport>(r.stewart), stewart_index(x));
}

TEST(Multicol, KleinGoldbergerHasNoDummySection) {
  const auto r = multicol(kg());
  ASSERT_TRUE(std::holds_alternative<Guidance>(r.ones_pct));
  EXPECT_EQ(std::get<Guidance>(r.ones_pct).message, guidance::kOneQualitative);
  const auto& cv = std::get<std::vector<LabeledValue>>(r.cv);
  expect_rel(cv[0].value, 0.2660921, 1e-6);
  EXPECT_EQ(std::get<std::vector<LabeledValue>>(r.vif), vif(kg()));
}

TEST(Multicol, SimpleModelDispatch) {
  const auto x = theil().subset(std::vector<std::size_t>{0, 1});
  const auto r = multicol(x);
  ASSERT_TRUE(r.simple_model.has_value());
  EXPECT_EQ(*r.simple_model, slm(x));
}

TEST(Multicol, ExactCollinearityIsFatal) {
  const Matrix x{{1, 1, 2, 5}, {1, 2, 4, 1}, {1, 3, 6, 2}, {1, 4, 8, 7}, {1, 5, 10, 3}};
  EXPECT_THROW(multicol(DesignMatrix(x, true, {})), SingularMatrixError);
}

TEST(Thresholds, DefaultsAndOverrides) {
  const Thresholds t;
  EXPECT_NEAR(t.det_threshold(14, 3), 0.06098764, 1e-12);
  EXPECT_NEAR(t.pairwise_corr, std::sqrt(0.9), 1e-7);
  EXPECT_EQ(classify_cn(53.0, t), CnVerdict::Severe);
  EXPECT_EQ(classify_cn(24.0, t), CnVerdict::Moderate);
  EXPECT_EQ(classify_cn(9.4, t), CnVerdict::None);

  std::istringstream in("# custom\nvif_limit = 5\ncn_severe=40\n");
  const Thresholds o = Thresholds::parse(in);
  EXPECT_EQ(o.vif_limit, 5.0);
  EXPECT_EQ(o.cn_severe, 40.0);
  EXPECT_EQ(o.cv_limit, t.cv_limit);

  std::istringstream bad_key("nope=1\n");
  EXPECT_THROW(Thresholds::parse(bad_key), DataError);
  std::istringstream bad_order("cn_moderate=50\n");
  EXPECT_THROW(Thresholds::parse(bad_order), DataError);
  std::istringstream negative("vif_limit=-1\n");
  EXPECT_THROW(Thresholds::parse(negative), DataError);
}
