#pragma once

#include <span>
#include <string>
#include <vector>

#include "collin/dataset.hpp"

namespace collin {

struct OLSFit {
  std::vector<std::string> labels;
  Vector beta;
  Vector se;
  Vector t;
  Vector p;  // two-sided
  double sigma = 0.0;
  std::size_t df_resid = 0;
  double rss = 0.0;
  double tss = 0.0;
  double r2 = 0.0;
  double adj_r2 = 0.0;
  double f_stat = 0.0;
  std::size_t f_df1 = 0;
  double f_p = 0.0;
  Vector residuals;
};

/// Least-squares fit with the usual inference summary. The design must contain an intercept
/// (R^2 and F use the centered total sum of squares).
OLSFit ols_fit(std::span<const double> y, const DesignMatrix& x);

struct ContradictionVerdict {
  bool contradiction = false;
  double alpha = 0.05;
  bool jointly_significant = false;
  std::vector<std::string> individually_significant;  // non-intercept coefficients with p < alpha
  std::string explanation;
};

/// Joint F test rejects while no individual (non-intercept) t test does: a symptom of
/// problematic near multicollinearity.
ContradictionVerdict significance_contradiction(const OLSFit& fit, double alpha = 0.05);

}  // namespace collin
