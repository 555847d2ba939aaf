#include "collin/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace collin {

std::string_view to_string(CnVerdict v) {
  switch (v) {
    case CnVerdict::None: return "not problematic";
    case CnVerdict::Moderate: return "moderate";
    case CnVerdict::Severe: return "problematic";
  }
  return "?";
}

CnVerdict classify_cn(double cn, const Thresholds& t) {
  if (cn > t.cn_severe) return CnVerdict::Severe;
  if (cn >= t.cn_moderate) return CnVerdict::Moderate;
  return CnVerdict::None;
}

namespace {

void require_two_quantitative(const DesignMatrix& x) {
  if (x.quantitative_positions().size() < 2) throw NotApplicable(guidance::kTwoQuantitative);
}

Matrix quantitative_correlation(const DesignMatrix& x) {
  const auto& q = x.quantitative_positions();
  const std::size_t n = x.n();
  std::vector<Vector> centered;
  std::vector<double> ss;
  for (std::size_t p : q) {
    Vector c = x.x().column(p);
    const double mean = std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(n);
    for (double& v : c) v -= mean;
    ss.push_back(dot(c, c));
    centered.push_back(std::move(c));
  }
  Matrix r = Matrix::identity(q.size());
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      const double v = dot(centered[a], centered[b]) / std::sqrt(ss[a] * ss[b]);
      r(a, b) = v;
      r(b, a) = v;
    }
  return r;
}

std::vector<std::string> quantitative_labels(const DesignMatrix& x) {
  std::vector<std::string> out;
  for (std::size_t p : x.quantitative_positions()) out.push_back(x.labels()[p]);
  return out;
}

Vector vif_values(const DesignMatrix& x) {
  require_two_quantitative(x);
  const Matrix r = quantitative_correlation(x);
  try {
    return spd_inverse(r).diagonal();
  } catch (const SingularMatrixError&) {
    const auto labels = quantitative_labels(x);
    std::size_t wa = 0, wb = 1;
    for (std::size_t a = 0; a < r.rows(); ++a)
      for (std::size_t b = a + 1; b < r.rows(); ++b)
        if (std::abs(r(a, b)) > std::abs(r(wa, wb))) {
          wa = a;
          wb = b;
        }
    throw SingularMatrixError("correlation matrix; most correlated pair " + labels[wa] + ", " +
                              labels[wb]);
  }
}

/// ||x_i||^2 * [(X'X)^-1]_ii for every column of m.
Vector stewart_k2(const Matrix& m) {
  const Matrix g = m.gram();
  const Matrix inv = spd_inverse(g);
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) out[i] = g(i, i) * inv(i, i);
  return out;
}

}  // namespace

CorrelationReport correlation_matrix(const DesignMatrix& x, const Thresholds& t) {
  require_two_quantitative(x);
  CorrelationReport rep;
  rep.labels = quantitative_labels(x);
  rep.r = quantitative_correlation(x);
  rep.det = determinant(rep.r);
  rep.det_threshold = t.det_threshold(x.n(), rep.labels.size());
  rep.det_problematic = rep.det < rep.det_threshold;
  for (std::size_t a = 0; a < rep.labels.size(); ++a)
    for (std::size_t b = a + 1; b < rep.labels.size(); ++b)
      if (std::abs(rep.r(a, b)) > t.pairwise_corr)
        rep.flagged_pairs.push_back({rep.labels[a], rep.labels[b], rep.r(a, b)});
  rep.pairwise_problematic = !rep.flagged_pairs.empty();
  return rep;
}

std::vector<LabeledValue> vif(const DesignMatrix& x) {
  const Vector values = vif_values(x);
  const auto labels = quantitative_labels(x);
  std::vector<LabeledValue> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({labels[i], values[i]});
  return out;
}

double condition_number(const DesignMatrix& x, bool include_intercept) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < x.k(); ++j)
    if (include_intercept || !x.intercept_present() || j != 0) cols.push_back(j);
  if (cols.empty()) throw NotApplicable("condition number needs at least one column besides the intercept");
  const Matrix scaled = unit_length_scale(x.x().select_columns(cols));
  const Vector eig = sym_eigenvalues(scaled.gram());
  const double lmax = eig.front();
  const double lmin = eig.back();
  if (!(lmin > kSingularPivot * lmax)) throw SingularMatrixError("smallest eigenvalue of scaled XᵀX");
  return std::sqrt(lmax / lmin);
}

CnReport cns(const DesignMatrix& x) {
  if (!x.intercept_present()) throw NotApplicable(guidance::kInterceptNeeded);
  CnReport rep;
  rep.cn_without = condition_number(x, false);
  rep.cn_with = condition_number(x, true);
  rep.increase_pct = 100.0 * (rep.cn_with - rep.cn_without) / rep.cn_with;
  return rep;
}

StewartReport stewart_index(const DesignMatrix& x) {
  if (!x.intercept_present()) throw NotApplicable(guidance::kInterceptNeeded);
  require_two_quantitative(x);
  std::vector<std::size_t> cols{0};
  const auto& q = x.quantitative_positions();
  cols.insert(cols.end(), q.begin(), q.end());
  const Vector k2 = stewart_k2(x.x().select_columns(cols));
  const Vector v = vif_values(x);

  StewartReport rep;
  for (std::size_t i = 0; i < cols.size(); ++i) rep.k2.push_back({x.labels()[cols[i]], k2[i]});
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double essential = 100.0 * v[i] / k2[i + 1];
    rep.essential_pct.push_back({x.labels()[q[i]], essential});
    rep.nonessential_pct.push_back({x.labels()[q[i]], 100.0 - essential});
  }
  return rep;
}

double coefficient_of_variation(std::span<const double> col) {
  if (col.size() < 2) throw DataError("coefficient of variation needs at least 2 values");
  const double n = static_cast<double>(col.size());
  const double mean = std::accumulate(col.begin(), col.end(), 0.0) / n;
  if (mean == 0.0)
    throw NotApplicable("CV undefined; variable is centered: nonessential collinearity impossible");
  double ss = 0.0;
  for (double v : col) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / n) / std::abs(mean);
}

double proportion_of_ones(std::span<const double> col) {
  if (col.empty()) throw DataError("proportion of ones of an empty column");
  std::size_t ones = 0;
  for (double v : col) {
    if (v == 1.0) ++ones;
    else if (v != 0.0) throw DataError("proportion of ones: column contains a value other than 0/1");
  }
  return 100.0 * static_cast<double>(ones) / static_cast<double>(col.size());
}

SlmReport slm(const DesignMatrix& x) {
  if (!x.intercept_present() || x.k() != 2) throw NotApplicable(guidance::kSimpleModel);
  SlmReport rep;
  rep.regressor = x.labels()[1];
  rep.dummy = x.is_dummy(1);
  const Vector col = x.x().column(1);
  rep.cn = condition_number(x, true);
  if (rep.dummy) {
    rep.ones_pct = proportion_of_ones(col);
  } else {
    rep.cv = coefficient_of_variation(col);
    rep.vif = 1.0;
    rep.k2 = stewart_k2(x.x());
  }
  return rep;
}

namespace {

template <class F>
auto attempt(F&& f) -> Outcome<decltype(f())> {
  try {
    return f();
  } catch (const NotApplicable& e) {
    return Guidance{e.what()};
  }
}

}  // namespace

DiagnosticsReport multicol(const DesignMatrix& x, const Thresholds& t) {
  DiagnosticsReport rep{.simple_model = std::nullopt,
                        .cv = Guidance{guidance::kSeeSimpleModel},
                        .ones_pct = Guidance{guidance::kSeeSimpleModel},
                        .correlation = Guidance{guidance::kSeeSimpleModel},
                        .vif = Guidance{guidance::kSeeSimpleModel},
                        .cn = Guidance{guidance::kSeeSimpleModel},
                        .stewart = Guidance{guidance::kSeeSimpleModel}};
  if (x.intercept_present() && x.k() == 2) {
    rep.simple_model = slm(x);
    return rep;
  }

  rep.cv = attempt([&] {
    if (x.quantitative_positions().empty()) throw NotApplicable(guidance::kTwoQuantitative);
    std::vector<LabeledValue> out;
    for (std::size_t p : x.quantitative_positions())
      out.push_back({x.labels()[p], coefficient_of_variation(x.x().column(p))});
    return out;
  });
  rep.ones_pct = attempt([&] {
    if (x.dummy_positions().empty()) throw NotApplicable(guidance::kOneQualitative);
    std::vector<LabeledValue> out;
    for (std::size_t p : x.dummy_positions())
      out.push_back({x.labels()[p], proportion_of_ones(x.x().column(p))});
    return out;
  });
  rep.correlation = attempt([&] { return correlation_matrix(x, t); });
  rep.vif = attempt([&] { return vif(x); });
  rep.cn = attempt([&] { return cns(x); });
  rep.stewart = attempt([&] { return stewart_index(x); });
  return rep;
}

}  // namespace collin
