#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "collin/diagnostics.hpp"
#include "collin/fixtures.hpp"
#include "support/oracles.hpp"

using namespace collin;

namespace {

DesignMatrix with_column(const DesignMatrix& x, std::size_t col, const Vector& values) {
  Matrix m = x.x();
  m.set_column(col, values);
  return DesignMatrix(m, x.intercept_present(), x.dummy_positions(), x.labels());
}

void expect_rel(double got, double want, double rel, const char* what) {
  EXPECT_NEAR(got, want, rel * std::abs(want)) << what;
}

}  // namespace

TEST(Properties, VifEqualsAuxiliaryRegressionOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t q = 2 + trial % 4;
    const DesignMatrix x = test::random_design(rng, 20 + trial % 7, q, trial % 2);
    std::vector<std::vector<double>> cols;
    for (std::size_t p : x.quantitative_positions()) cols.push_back(x.x().column(p));
    const auto v = vif(x);
    for (std::size_t i = 0; i < q; ++i) {
      const double oracle = 1.0 / (1.0 - test::auxiliary_r2(cols, i));
      expect_rel(v[i].value, oracle, 1e-8, "vif vs 1/(1-R2)");
    }
  }
}

TEST(Properties, ConditionNumberInterlacing) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const DesignMatrix x = test::random_design(rng, 15 + trial % 10, 1 + trial % 4, trial % 3,
                                               true, (trial % 5) * 3.0);
    if (x.k() < 2) continue;
    const auto r = cns(x);
    EXPECT_GE(r.cn_with, r.cn_without * (1.0 - 1e-12));
    EXPECT_GE(r.increase_pct, -1e-10);
    EXPECT_LT(r.increase_pct, 100.0);
  }
  for (const char* name : {"theil", "kg"}) {
    const auto r = cns(design_matrix(fixture(name)));
    EXPECT_GE(r.cn_with, r.cn_without);
  }
}

TEST(Properties, ScaleInvariance) {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int trial = 0; trial < 20; ++trial) {
    const DesignMatrix x = test::random_design(rng, 25, 3, 1);
    const std::size_t col = 1 + trial % 3;
    Vector scaled = x.x().column(col);
    const double c = factor(rng);
    for (double& v : scaled) v *= c;
    const DesignMatrix y = with_column(x, col, scaled);

    const auto ra = correlation_matrix(x), rb = correlation_matrix(y);
    for (std::size_t i = 0; i < ra.r.rows(); ++i)
      for (std::size_t j = 0; j < ra.r.cols(); ++j) EXPECT_NEAR(ra.r(i, j), rb.r(i, j), 1e-9);
    const auto va = vif(x), vb = vif(y);
    for (std::size_t i = 0; i < va.size(); ++i) expect_rel(vb[i].value, va[i].value, 1e-9, "vif");
    const auto ca = cns(x), cb = cns(y);
    expect_rel(cb.cn_with, ca.cn_with, 1e-9, "cn with");
    expect_rel(cb.cn_without, ca.cn_without, 1e-9, "cn without");
    EXPECT_NEAR(cb.increase_pct, ca.increase_pct, 1e-9 * 100.0);
    const auto sa = stewart_index(x), sb = stewart_index(y);
    for (std::size_t i = 0; i < sa.k2.size(); ++i) expect_rel(sb.k2[i].value, sa.k2[i].value, 1e-9, "k2");
    expect_rel(coefficient_of_variation(scaled), coefficient_of_variation(x.x().column(col)), 1e-9, "cv");
  }
}

TEST(Properties, TranslationLowersCvAndRaisesStewartIndex) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    DesignMatrix x = test::random_design(rng, 30, 3, 0, true, 0.0);
    Vector base = x.x().column(1);
    double mean = 0.0;
    for (double v : base) mean += v;
    mean /= static_cast<double>(base.size());
    for (double& v : base) v -= mean;

    double prev_cv = std::numeric_limits<double>::infinity();
    double prev_k2 = stewart_index(with_column(x, 1, base)).k2[1].value;
    for (double c : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
      Vector shifted = base;
      for (double& v : shifted) v += c;
      const double cv = coefficient_of_variation(shifted);
      const double k2 = stewart_index(with_column(x, 1, shifted)).k2[1].value;
      EXPECT_LT(cv, prev_cv);
      EXPECT_GT(k2, prev_k2);
      prev_cv = cv;
      prev_k2 = k2;
    }
  }
}

TEST(Properties, StewartIdentity) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const DesignMatrix x = test::random_design(rng, 22, 2 + trial % 3, trial % 2, true, 4.0);
    const auto s = stewart_index(x);
    const auto v = vif(x);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_GE(s.k2[i + 1].value - v[i].value, -1e-9);
    for (const auto& k : s.k2) EXPECT_GE(k.value, 1.0 - 1e-12);

    // Centering a regressor removes its nonessential part: k^2 = VIF.
    const std::size_t col = x.quantitative_positions().front();
    Vector c = x.x().column(col);
    double mean = 0.0;
    for (double e : c) mean += e;
    mean /= static_cast<double>(c.size());
    for (double& e : c) e -= mean;
    const DesignMatrix centered = with_column(x, col, c);
    const auto sc = stewart_index(centered);
    const auto vc = vif(centered);
    expect_rel(sc.k2[1].value, vc[0].value, 1e-9, "centered k2 == vif");
  }
}

TEST(Properties, DeterminantRange) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const auto r = correlation_matrix(test::random_design(rng, 18, 2 + trial % 4, 0));
    EXPECT_GE(r.det, 0.0);
    EXPECT_LE(r.det, 1.0);
    EXPECT_LT(r.det, 1.0 - 1e-12);  // random columns are never exactly uncorrelated
    for (std::size_t i = 0; i < r.r.rows(); ++i) {
      EXPECT_EQ(r.r(i, i), 1.0);
      for (std::size_t j = 0; j < r.r.cols(); ++j) EXPECT_LE(std::abs(r.r(i, j)), 1.0);
    }
  }
  const Matrix x{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};
  EXPECT_NEAR(correlation_matrix(DesignMatrix(x, true, {})).det, 1.0, 1e-12);
}

TEST(Properties, ExactCollinearityNeverReturnsNumbers) {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 10; ++trial) {
    const DesignMatrix base = test::random_design(rng, 16, 3, 0);
    Vector combo(base.n());
    for (std::size_t i = 0; i < base.n(); ++i) combo[i] = 2.0 * base.x()(i, 1) - 0.5 * base.x()(i, 2) + 3.0;
    const DesignMatrix x = with_column(base, 3, combo);
    EXPECT_THROW(vif(x), SingularMatrixError);
    EXPECT_THROW(cns(x), SingularMatrixError);
    EXPECT_THROW(stewart_index(x), SingularMatrixError);
    EXPECT_THROW(condition_number(x, true), SingularMatrixError);
    EXPECT_THROW(multicol(x), SingularMatrixError);
  }
}
