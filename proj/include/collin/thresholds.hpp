#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace collin {

/// Decision thresholds for the detection measures. Defaults are the published values.
struct Thresholds {
  double pairwise_corr = 0.9486833;  // sqrt(0.9)
  double det_r_intercept_a = 0.1013;
  double det_r_n_coef = 0.00008626;
  double det_r_k_coef = 0.01384;
  double vif_limit = 10.0;
  double cn_moderate = 20.0;
  double cn_severe = 30.0;
  double cv_limit = 0.1002506;

  /// det(R) below this value flags essential collinearity. `k` is the number of
  /// quantitative regressors entering R.
  double det_threshold(std::size_t n, std::size_t k) const {
    return det_r_intercept_a + det_r_n_coef * static_cast<double>(n) -
           det_r_k_coef * static_cast<double>(k);
  }

  /// Throws DataError unless every threshold is positive and cn_moderate < cn_severe.
  void validate() const;

  /// Reads `key = value` lines over the defaults. Blank lines and '#' comments are ignored.
  static Thresholds parse(std::istream& in);
  /// Loads overrides from the file named by COLLIN_DIAG_THRESHOLDS, or defaults when unset.
  static Thresholds from_environment();
};

inline constexpr const char* kThresholdsEnvVar = "COLLIN_DIAG_THRESHOLDS";

}  // namespace collin
