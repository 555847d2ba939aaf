#include "collin/ols.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "collin/distributions.hpp"

namespace collin {

OLSFit ols_fit(std::span<const double> y, const DesignMatrix& x) {
  if (!x.intercept_present())
    throw DataError("OLS inference requires an intercept (centered total sum of squares)");
  const std::size_t n = x.n();
  const std::size_t k = x.k();
  if (y.size() != n) throw DataError("response length differs from design rows");
  if (n <= k) throw DataError("OLS needs more observations than columns");

  OLSFit fit;
  fit.labels = x.labels();
  fit.beta = least_squares(x.x(), y);
  const Vector fitted = x.x() * std::span<const double>(fit.beta);
  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) fit.residuals[i] = y[i] - fitted[i];

  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) fit.tss += (y[i] - mean_y) * (y[i] - mean_y);
  fit.rss = dot(fit.residuals, fit.residuals);
  // Residuals at round-off level of y: treat as an exact fit.
  const double exact_floor = std::pow(64.0 * std::numeric_limits<double>::epsilon(), 2) * dot(y, y);
  if (fit.rss <= exact_floor) fit.rss = 0.0;

  fit.df_resid = n - k;
  fit.f_df1 = k - 1;
  const double df = static_cast<double>(fit.df_resid);
  const double sigma2 = fit.rss / df;
  fit.sigma = std::sqrt(sigma2);

  const Matrix inv = spd_inverse(x.x().gram());
  fit.se.resize(k);
  fit.t.resize(k);
  fit.p.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    fit.se[j] = std::sqrt(sigma2 * inv(j, j));
    if (fit.se[j] == 0.0) {
      fit.t[j] = fit.beta[j] == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), fit.beta[j]);
    } else {
      fit.t[j] = fit.beta[j] / fit.se[j];
    }
    fit.p[j] = t_two_sided_p(fit.t[j], df);
  }

  fit.r2 = fit.tss > 0.0 ? 1.0 - fit.rss / fit.tss : 1.0;
  fit.adj_r2 = 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) / df;
  if (k < 2) {
    fit.f_stat = std::numeric_limits<double>::quiet_NaN();
    fit.f_p = std::numeric_limits<double>::quiet_NaN();
  } else if (fit.rss == 0.0) {
    fit.f_stat = std::numeric_limits<double>::infinity();
    fit.f_p = 0.0;
  } else {
    fit.f_stat = ((fit.tss - fit.rss) / static_cast<double>(fit.f_df1)) / sigma2;
    fit.f_p = f_sf(fit.f_stat, static_cast<double>(fit.f_df1), df);
  }
  return fit;
}

ContradictionVerdict significance_contradiction(const OLSFit& fit, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DataError("alpha must lie in (0, 1)");
  ContradictionVerdict v;
  v.alpha = alpha;
  v.jointly_significant = fit.f_p < alpha;
  for (std::size_t j = 1; j < fit.p.size(); ++j)
    if (fit.p[j] < alpha) v.individually_significant.push_back(fit.labels[j]);
  v.contradiction = v.jointly_significant && v.individually_significant.empty();

  std::ostringstream msg;
  if (v.contradiction) {
    msg << "joint F test rejects at alpha=" << alpha
        << " but no individual coefficient (excluding the intercept) is significant";
  } else if (!v.jointly_significant) {
    msg << "no apparent contradiction: joint F test does not reject at alpha=" << alpha;
  } else {
    msg << "no apparent contradiction: " << v.individually_significant.size()
        << " coefficient(s) significant at alpha=" << alpha;
  }
  v.explanation = msg.str();
  return v;
}

}  // namespace collin
