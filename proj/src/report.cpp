#include "collin/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>

namespace collin {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Inf" : "-Inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

namespace {

json values_of(const std::vector<LabeledValue>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.value);
  return out;
}

json labels_of(const std::vector<LabeledValue>& v) {
  json out = json::array();
  for (const auto& e : v) out.push_back(e.label);
  return out;
}

template <class T>
json outcome_json(const Outcome<T>& o, auto&& convert) {
  if (const auto* g = std::get_if<Guidance>(&o)) return json{{"guidance", g->message}};
  return convert(std::get<T>(o));
}

std::size_t label_width(const std::vector<std::string>& labels) {
  std::size_t w = 0;
  for (const auto& l : labels) w = std::max(w, l.size());
  return w + 2;
}

void write_labeled(std::ostream& os, const std::vector<LabeledValue>& values) {
  std::vector<std::string> labels;
  for (const auto& v : values) labels.push_back(v.label);
  const auto w = label_width(labels);
  for (const auto& v : values)
    os << "  " << std::left << std::setw(static_cast<int>(w)) << v.label << format_number(v.value) << '\n';
  os << std::right;
}

}  // namespace

json to_json(const CorrelationReport& r) {
  json matrix = json::array();
  for (std::size_t i = 0; i < r.r.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < r.r.cols(); ++j) row.push_back(r.r(i, j));
    matrix.push_back(row);
  }
  json pairs = json::array();
  for (const auto& p : r.flagged_pairs) pairs.push_back({{"first", p.first}, {"second", p.second}, {"r", p.r}});
  return {{"labels", r.labels},
          {"matrix", matrix},
          {"det", r.det},
          {"det_threshold", r.det_threshold},
          {"det_problematic", r.det_problematic},
          {"flagged_pairs", pairs},
          {"pairwise_problematic", r.pairwise_problematic}};
}

json to_json(const std::vector<LabeledValue>& values, const char* value_key) {
  return {{"labels", labels_of(values)}, {value_key, values_of(values)}};
}

json to_json(const CnReport& r) {
  return {{"without", r.cn_without}, {"with", r.cn_with}, {"increase_pct", r.increase_pct}};
}

json to_json(const StewartReport& r) {
  return {{"labels", labels_of(r.k2)},
          {"k2", values_of(r.k2)},
          {"split_labels", labels_of(r.essential_pct)},
          {"essential_pct", values_of(r.essential_pct)},
          {"nonessential_pct", values_of(r.nonessential_pct)}};
}

json to_json(const SlmReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"regressor", r.regressor}, {"dummy", r.dummy}, {"cv", opt(r.cv)},     {"vif", opt(r.vif)},
          {"ones_pct", opt(r.ones_pct)}, {"cn", r.cn},     {"k2", r.k2}};
}

json to_json(const DiagnosticsReport& r) {
  auto list = [](const char* key) {
    return [key](const std::vector<LabeledValue>& v) { return to_json(v, key); };
  };
  auto plain = [](const auto& v) { return to_json(v); };
  return {{"simple_model", r.simple_model ? to_json(*r.simple_model) : json(nullptr)},
          {"cv", outcome_json(r.cv, list("cv"))},
          {"ones_pct", outcome_json(r.ones_pct, list("ones_pct"))},
          {"correlation", outcome_json(r.correlation, plain)},
          {"vif", outcome_json(r.vif, list("vif"))},
          {"cn", outcome_json(r.cn, plain)},
          {"stewart", outcome_json(r.stewart, plain)}};
}

json to_json(const OLSFit& fit) {
  return {{"labels", fit.labels},     {"beta", fit.beta},       {"se", fit.se},
          {"t", fit.t},               {"p", fit.p},             {"sigma", fit.sigma},
          {"df_resid", fit.df_resid}, {"r2", fit.r2},           {"adj_r2", fit.adj_r2},
          {"f_stat", fit.f_stat},     {"f_df1", fit.f_df1},     {"f_df2", fit.df_resid},
          {"f_p", fit.f_p},           {"rss", fit.rss},         {"tss", fit.tss}};
}

json to_json(const ContradictionVerdict& v) {
  return {{"contradiction", v.contradiction},
          {"alpha", v.alpha},
          {"jointly_significant", v.jointly_significant},
          {"individually_significant", v.individually_significant},
          {"explanation", v.explanation}};
}

json to_json(const SampleSummary& s) {
  return {{"mean", s.mean}, {"sd", s.sd},     {"min", s.min},
          {"max", s.max},   {"q025", s.q025}, {"q975", s.q975}};
}

bool is_problematic(const CorrelationReport& r) { return r.det_problematic || r.pairwise_problematic; }

bool is_problematic(const std::vector<LabeledValue>& vifs, const Thresholds& t) {
  return std::any_of(vifs.begin(), vifs.end(), [&](const LabeledValue& v) { return v.value > t.vif_limit; });
}

bool is_problematic(const SlmReport& r, const Thresholds& t) {
  return classify_cn(r.cn, t) == CnVerdict::Severe || (r.cv && *r.cv < t.cv_limit);
}

bool is_problematic(const DiagnosticsReport& r, const Thresholds& t) {
  if (r.simple_model) return is_problematic(*r.simple_model, t);
  bool bad = false;
  if (const auto* cv = std::get_if<std::vector<LabeledValue>>(&r.cv))
    bad |= std::any_of(cv->begin(), cv->end(), [&](const LabeledValue& v) { return v.value < t.cv_limit; });
  if (const auto* c = std::get_if<CorrelationReport>(&r.correlation)) bad |= is_problematic(*c);
  if (const auto* v = std::get_if<std::vector<LabeledValue>>(&r.vif)) bad |= is_problematic(*v, t);
  if (const auto* cn = std::get_if<CnReport>(&r.cn)) bad |= classify_cn(cn->cn_with, t) == CnVerdict::Severe;
  return bad;
}

void write_text(std::ostream& os, const CorrelationReport& r) {
  const auto w = static_cast<int>(std::max<std::size_t>(label_width(r.labels), 11));
  os << "Correlation matrix\n" << std::left << std::setw(w) << "";
  for (const auto& l : r.labels) os << std::setw(w) << l;
  os << '\n';
  for (std::size_t i = 0; i < r.r.rows(); ++i) {
    os << std::setw(w) << r.labels[i];
    for (std::size_t j = 0; j < r.r.cols(); ++j) os << std::setw(w) << format_number(r.r(i, j));
    os << '\n';
  }
  os << std::right << "\nCorrelation matrix's determinant\n  " << format_number(r.det) << '\n';
  if (r.det_problematic)
    os << "PROBLEMATIC: det(R)=" << format_number(r.det) << " < threshold " << format_number(r.det_threshold)
       << '\n';
  else
    os << "OK: det(R)=" << format_number(r.det) << " >= threshold " << format_number(r.det_threshold) << '\n';
  if (r.flagged_pairs.empty()) {
    os << "OK: no pairwise |r| above threshold\n";
  } else {
    for (const auto& p : r.flagged_pairs)
      os << "PROBLEMATIC: |r(" << p.first << ", " << p.second << ")|=" << format_number(std::abs(p.r))
         << " above pairwise threshold\n";
  }
}

void write_vif_text(std::ostream& os, const std::vector<LabeledValue>& vifs, const Thresholds& t) {
  os << "Variance Inflation Factors\n";
  write_labeled(os, vifs);
  for (const auto& v : vifs)
    if (v.value > t.vif_limit)
      os << "PROBLEMATIC: VIF(" << v.label << ")=" << format_number(v.value) << " > "
         << format_number(t.vif_limit) << '\n';
  if (!is_problematic(vifs, t)) os << "OK: every VIF <= " << format_number(t.vif_limit) << '\n';
}

namespace {

void cn_verdict_line(std::ostream& os, const char* what, double cn, const Thresholds& t) {
  switch (classify_cn(cn, t)) {
    case CnVerdict::Severe:
      os << "PROBLEMATIC: " << what << "=" << format_number(cn) << " > " << format_number(t.cn_severe) << '\n';
      break;
    case CnVerdict::Moderate:
      os << "MODERATE: " << what << "=" << format_number(cn) << " in [" << format_number(t.cn_moderate) << ", "
         << format_number(t.cn_severe) << "]\n";
      break;
    case CnVerdict::None:
      os << "OK: " << what << "=" << format_number(cn) << " < " << format_number(t.cn_moderate) << '\n';
      break;
  }
}

}  // namespace

void write_cn_text(std::ostream& os, double cn, bool include_intercept, const Thresholds& t) {
  os << (include_intercept ? "Condition Number\n  " : "Condition Number without intercept\n  ")
     << format_number(cn) << '\n';
  cn_verdict_line(os, "CN", cn, t);
}

void write_text(std::ostream& os, const CnReport& r, const Thresholds& t) {
  os << "Condition Number without intercept\n  " << format_number(r.cn_without) << '\n'
     << "Condition Number with intercept\n  " << format_number(r.cn_with) << '\n'
     << "Increase (in percentage)\n  " << format_number(r.increase_pct) << '\n';
  cn_verdict_line(os, "CN without intercept", r.cn_without, t);
  cn_verdict_line(os, "CN with intercept", r.cn_with, t);
  os << "NOTE: no established threshold for the percentage increase\n";
}

void write_text(std::ostream& os, const StewartReport& r) {
  os << "Stewart index\n";
  write_labeled(os, r.k2);
  os << "Proportion of essential collinearity in i-th independent variable (without intercept)\n";
  write_labeled(os, r.essential_pct);
  os << "Proportion of non-essential collinearity in i-th independent variable (without intercept)\n";
  write_labeled(os, r.nonessential_pct);
  os << "NOTE: no established threshold for the Stewart index\n";
}

void write_cv_text(std::ostream& os, const std::vector<LabeledValue>& cvs, const Thresholds& t) {
  os << "Coefficients of Variation\n";
  write_labeled(os, cvs);
  for (const auto& v : cvs) {
    if (v.value < t.cv_limit)
      os << "PROBLEMATIC: CV(" << v.label << ")=" << format_number(v.value) << " < "
         << format_number(t.cv_limit) << " (nonessential collinearity)\n";
  }
}

void write_ones_text(std::ostream& os, const std::vector<LabeledValue>& ones) {
  os << "Proportion of ones in the dummy variables\n";
  write_labeled(os, ones);
  for (const auto& v : ones)
    if (v.value == 0.0 || v.value == 100.0)
      os << "DEGENERATE: dummy " << v.label << " is constant\n";
}

void write_text(std::ostream& os, const SlmReport& r, const Thresholds& t) {
  os << "Simple linear model: regressor " << r.regressor << (r.dummy ? " (dummy)\n" : "\n");
  if (r.dummy) {
    os << "Proportion of ones in the dummy variable\n  " << format_number(*r.ones_pct) << '\n';
  } else {
    os << "Coefficient of Variation\n  " << format_number(*r.cv) << '\n'
       << "Variance Inflation Factor\n  " << format_number(*r.vif) << '\n';
  }
  os << "Condition Number\n  " << format_number(r.cn) << '\n';
  if (!r.dummy) {
    os << "Stewart index\n ";
    for (double v : r.k2) os << ' ' << format_number(v);
    os << '\n';
  }
  cn_verdict_line(os, "CN", r.cn, t);
  if (r.cv && *r.cv < t.cv_limit)
    os << "PROBLEMATIC: CV=" << format_number(*r.cv) << " < " << format_number(t.cv_limit)
       << " (nonessential collinearity)\n";
}

void write_text(std::ostream& os, const DiagnosticsReport& r, const Thresholds& t) {
  if (r.simple_model) {
    write_text(os, *r.simple_model, t);
    return;
  }
  auto guidance = [&](const char* heading, const Guidance& g) { os << heading << "\n  " << g.message << '\n'; };

  if (const auto* cv = std::get_if<std::vector<LabeledValue>>(&r.cv)) write_cv_text(os, *cv, t);
  else guidance("Coefficients of Variation", std::get<Guidance>(r.cv));
  os << '\n';
  if (const auto* ones = std::get_if<std::vector<LabeledValue>>(&r.ones_pct)) write_ones_text(os, *ones);
  else guidance("Proportion of ones in the dummy variables", std::get<Guidance>(r.ones_pct));
  os << '\n';
  if (const auto* c = std::get_if<CorrelationReport>(&r.correlation)) write_text(os, *c);
  else guidance("R and det(R)", std::get<Guidance>(r.correlation));
  os << '\n';
  if (const auto* v = std::get_if<std::vector<LabeledValue>>(&r.vif)) write_vif_text(os, *v, t);
  else guidance("Variance Inflation Factors", std::get<Guidance>(r.vif));
  os << '\n';
  if (const auto* cn = std::get_if<CnReport>(&r.cn)) write_text(os, *cn, t);
  else guidance("Condition Number", std::get<Guidance>(r.cn));
  os << '\n';
  if (const auto* s = std::get_if<StewartReport>(&r.stewart)) write_text(os, *s);
  else guidance("Stewart index", std::get<Guidance>(r.stewart));
}

void write_text(std::ostream& os, const OLSFit& fit) {
  const auto w = static_cast<int>(label_width(fit.labels));
  os << "Coefficients:\n"
     << std::left << std::setw(w) << "" << std::right << std::setw(14) << "Estimate" << std::setw(14)
     << "Std. Error" << std::setw(14) << "t value" << std::setw(14) << "Pr(>|t|)" << '\n';
  for (std::size_t j = 0; j < fit.beta.size(); ++j) {
    os << std::left << std::setw(w) << fit.labels[j] << std::right << std::setw(14) << format_number(fit.beta[j])
       << std::setw(14) << format_number(fit.se[j]) << std::setw(14) << format_number(fit.t[j]) << std::setw(14)
       << format_number(fit.p[j]) << '\n';
  }
  os << "\nResidual standard error: " << format_number(fit.sigma) << " on " << fit.df_resid
     << " degrees of freedom\n"
     << "Multiple R-squared: " << format_number(fit.r2) << ", Adjusted R-squared: " << format_number(fit.adj_r2)
     << '\n'
     << "F-statistic: " << format_number(fit.f_stat) << " on " << fit.f_df1 << " and " << fit.df_resid
     << " DF, p-value: " << format_number(fit.f_p) << '\n';
}

void write_text(std::ostream& os, const ContradictionVerdict& v) {
  os << (v.contradiction ? "PROBLEMATIC: " : "OK: ") << v.explanation << '\n';
}

void write_text(std::ostream& os, const PerturbResult& r, const PerturbConfig& cfg) {
  os << "Perturbation: tol=" << format_number(cfg.tol) << ", iterations=" << cfg.iterations
     << ", noise Normal(" << format_number(cfg.noise_mean) << ", " << format_number(cfg.noise_sd)
     << "), seed=" << cfg.seed << '\n';
  auto block = [&](const char* title, const SampleSummary& s) {
    os << title << '\n'
       << "  mean " << format_number(s.mean) << "  sd " << format_number(s.sd) << '\n'
       << "  min  " << format_number(s.min) << "  max " << format_number(s.max) << '\n'
       << "  2.5% " << format_number(s.q025) << "  97.5% " << format_number(s.q975) << '\n';
  };
  block("Introduced perturbation (%)", r.achieved);
  block("Change in coefficient estimates (%)", r.change);
  os << "NOTE: no established threshold for the percentage change\n";
}

}  // namespace collin
