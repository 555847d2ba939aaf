#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "collin/dataset.hpp"
#include "collin/linalg.hpp"
#include "collin/thresholds.hpp"

namespace collin {

struct LabeledValue {
  std::string label;
  double value = 0.0;
  friend bool operator==(const LabeledValue&, const LabeledValue&) = default;
};

struct CorrelatedPair {
  std::string first;
  std::string second;
  double r = 0.0;
  friend bool operator==(const CorrelatedPair&, const CorrelatedPair&) = default;
};

struct CorrelationReport {
  std::vector<std::string> labels;
  Matrix r;
  double det = 0.0;
  double det_threshold = 0.0;
  std::vector<CorrelatedPair> flagged_pairs;  // |r| above Thresholds::pairwise_corr
  bool det_problematic = false;
  bool pairwise_problematic = false;
  friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

struct CnReport {
  double cn_without = 0.0;
  double cn_with = 0.0;
  double increase_pct = 0.0;
  friend bool operator==(const CnReport&, const CnReport&) = default;
};

struct StewartReport {
  /// k_i^2 for the intercept followed by each quantitative regressor.
  std::vector<LabeledValue> k2;
  /// 100 * VIF(i) / k_i^2 per quantitative regressor.
  std::vector<LabeledValue> essential_pct;
  std::vector<LabeledValue> nonessential_pct;
  friend bool operator==(const StewartReport&, const StewartReport&) = default;
};

enum class CnVerdict { None, Moderate, Severe };
std::string_view to_string(CnVerdict v);
CnVerdict classify_cn(double cn, const Thresholds& t = {});

/// Pearson correlations among the quantitative regressors (intercept and dummies excluded).
CorrelationReport correlation_matrix(const DesignMatrix& x, const Thresholds& t = {});

/// Diagonal of the inverse correlation matrix, one entry per quantitative regressor.
std::vector<LabeledValue> vif(const DesignMatrix& x);

/// sqrt(lambda_max / lambda_min) of X'X after unit-length column scaling. Dummies are kept;
/// the intercept is dropped when include_intercept is false.
double condition_number(const DesignMatrix& x, bool include_intercept = true);

CnReport cns(const DesignMatrix& x);

StewartReport stewart_index(const DesignMatrix& x);

/// Population standard deviation over |mean|. Throws NotApplicable for a zero mean.
double coefficient_of_variation(std::span<const double> col);

/// Percentage of ones in a 0/1 column.
double proportion_of_ones(std::span<const double> col);

/// Simple linear model: intercept plus exactly one regressor.
struct SlmReport {
  std::string regressor;
  bool dummy = false;
  std::optional<double> cv;               // quantitative regressor only
  std::optional<double> vif;              // always 1 for a quantitative regressor
  std::optional<double> ones_pct;         // dummy regressor only
  double cn = 0.0;
  std::vector<double> k2;                 // quantitative regressor only; both entries equal
  friend bool operator==(const SlmReport&, const SlmReport&) = default;
};

SlmReport slm(const DesignMatrix& x);

/// A measure that could not be computed for the design, with the reason shown to the user.
struct Guidance {
  std::string message;
  friend bool operator==(const Guidance&, const Guidance&) = default;
};

template <class T>
using Outcome = std::variant<T, Guidance>;

struct DiagnosticsReport {
  /// Set when the design is a simple linear model; the remaining fields then hold Guidance.
  std::optional<SlmReport> simple_model;
  Outcome<std::vector<LabeledValue>> cv;
  Outcome<std::vector<LabeledValue>> ones_pct;
  Outcome<CorrelationReport> correlation;
  Outcome<std::vector<LabeledValue>> vif;
  Outcome<CnReport> cn;
  Outcome<StewartReport> stewart;
  friend bool operator==(const DiagnosticsReport&, const DiagnosticsReport&) = default;
};

/// Runs every applicable measure. Inapplicable measures carry their guidance message;
/// exact collinearity still throws SingularMatrixError.
DiagnosticsReport multicol(const DesignMatrix& x, const Thresholds& t = {});

namespace guidance {
inline constexpr const char* kTwoQuantitative =
    "At least two quantitative independent variables are needed (excluding the intercept and dummies)";
inline constexpr const char* kOneQualitative =
    "At least one qualitative independent variable is needed (excluding the intercept)";
inline constexpr const char* kSimpleModel =
    "Only 2 independent variables are needed (including the intercept)";
inline constexpr const char* kInterceptNeeded = "The design matrix must contain an intercept";
inline constexpr const char* kSeeSimpleModel = "Simple linear model: see the SLM report";
}  // namespace guidance

}  // namespace collin
