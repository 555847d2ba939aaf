#include "collin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "collin/fixtures.hpp"
#include "collin/report.hpp"

namespace collin {

namespace {

struct Options {
  std::string command;
  std::string data;
  std::string fixture;
  std::string response;
  std::vector<std::string> dummy;
  std::vector<std::string> quant;
  std::vector<std::string> ignore;
  bool no_intercept = false;
  std::string format = "text";
  double alpha = 0.05;
  double tol = 0.01;
  std::size_t iterations = 5000;
  double noise_mean = 10.0;
  double noise_sd = 10.0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::vector<std::size_t> pos;
  bool fail_on_problematic = false;
  bool samples = false;
};

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"rdetr", "correlation matrix of the quantitative regressors and its determinant"},
    {"vif", "variance inflation factors"},
    {"cn", "condition number of the unit-length scaled design"},
    {"cns", "condition number without and with the intercept, and the increase"},
    {"ki", "Stewart index with the essential / nonessential split"},
    {"cv", "coefficients of variation and proportions of ones in dummies"},
    {"slm", "simple linear model diagnostics (intercept plus one regressor)"},
    {"multicol", "every applicable measure"},
    {"ols", "least-squares fit with inference summary and significance contradiction check"},
    {"perturb", "Monte Carlo perturbation of quantitative regressors"}};

void add_options(CLI::App* sub, Options& o) {
  auto* data = sub->add_option("--data", o.data, "CSV file (comma separated, header row)");
  auto* fix = sub->add_option("--fixture", o.fixture, "embedded dataset: theil | kg");
  data->excludes(fix);
  sub->add_option("--response", o.response, "label of the response column");
  sub->add_option("--dummy", o.dummy, "labels of 0/1 dummy regressors");
  sub->add_option("--quant", o.quant, "labels of quantitative regressors (default: all other columns)");
  sub->add_option("--ignore", o.ignore, "labels of columns to leave out");
  sub->add_flag("--no-intercept", o.no_intercept, "do not prepend the intercept column");
  sub->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--alpha", o.alpha, "significance level for the contradiction check");
  sub->add_option("--tol", o.tol, "relative perturbation magnitude");
  sub->add_option("--iterations", o.iterations, "perturbation repetitions");
  sub->add_option("--noise-mean", o.noise_mean, "mean of the normal noise");
  sub->add_option("--noise-sd", o.noise_sd, "sd of the normal noise");
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_option("--threads", o.threads, "perturbation worker threads (result is independent of this)");
  sub->add_option("--pos", o.pos,
                  "perturb: 1-based positions of the perturbed regressors, intercept excluded; "
                  "other commands: 1-based positions of dummy columns in X, intercept = 1")
      ->delimiter(',');
  sub->add_flag("--fail-on-problematic", o.fail_on_problematic, "exit 1 when problematic collinearity is found");
  sub->add_flag("--samples", o.samples, "perturb: include per-iteration values in json output");
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : ", ") + e;
  return s;
}

Dataset load_dataset(const Options& o) {
  if (o.data.empty() == o.fixture.empty()) throw DataError("exactly one of --data or --fixture is required");
  const bool intercept = !o.no_intercept;

  if (!o.fixture.empty()) {
    RoleMap roles = fixture_roles(o.fixture);
    if (!o.quant.empty() || !o.dummy.empty() || !o.response.empty()) {
      RoleMap custom;
      for (const auto& [label, role] : roles)
        if (role == ColumnRole::Response && o.response.empty()) custom[label] = role;
      if (!o.response.empty()) custom[o.response] = ColumnRole::Response;
      if (o.quant.empty() && o.dummy.empty()) {
        for (const auto& [label, role] : roles)
          if (role != ColumnRole::Response && !custom.contains(label)) custom[label] = role;
      }
      for (const auto& q : o.quant) custom[q] = ColumnRole::Quantitative;
      for (const auto& d : o.dummy) custom[d] = ColumnRole::Dummy;
      roles = std::move(custom);
    }
    for (const auto& i : o.ignore) roles.erase(i);
    return fixture(o.fixture, roles, intercept);
  }

  std::ifstream in(o.data);
  if (!in) throw DataError("cannot open '" + o.data + "': missing file");
  const auto header = read_csv_header(in);
  RoleMap roles;
  if (!o.response.empty()) roles[o.response] = ColumnRole::Response;
  for (const auto& d : o.dummy) roles[d] = ColumnRole::Dummy;
  if (!o.quant.empty()) {
    for (const auto& q : o.quant) roles[q] = ColumnRole::Quantitative;
  } else {
    for (const auto& h : header)
      if (!roles.contains(h) && std::find(o.ignore.begin(), o.ignore.end(), h) == o.ignore.end())
        roles[h] = ColumnRole::Quantitative;
  }
  for (const auto& i : o.ignore) roles.erase(i);
  return load_csv(o.data, roles, intercept);
}

DesignMatrix apply_dummy_positions(const DesignMatrix& x, const Options& o, std::ostream& err) {
  if (o.pos.empty()) return x;
  std::vector<std::size_t> dummies;
  for (std::size_t p : o.pos) {
    if (p < 1 || p > x.k()) throw DataError("--pos " + std::to_string(p) + " is outside 1.." + std::to_string(x.k()));
    if (x.intercept_present() && p == 1) throw DataError("--pos 1 is the intercept and cannot be a dummy");
    dummies.push_back(p - 1);
  }
  std::sort(dummies.begin(), dummies.end());
  if (dummies != x.dummy_positions())
    err << "warning: --pos overrides the declared dummy columns\n";
  return DesignMatrix(x.x(), x.intercept_present(), dummies, x.labels());
}

std::vector<std::size_t> perturb_positions(const DesignMatrix& x, const Options& o) {
  std::vector<std::size_t> cols;
  const std::size_t offset = x.intercept_present() ? 1 : 0;
  for (std::size_t p : o.pos) {
    if (p < 1 || p + offset > x.k())
      throw DataError("--pos " + std::to_string(p) + " is outside 1.." + std::to_string(x.k() - offset));
    cols.push_back(p - 1 + offset);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

struct CommandOutput {
  nlohmann::json result;
  std::string text;
  bool problematic = false;
};

CommandOutput run_command(const Options& o, const Dataset& ds, const Thresholds& t, std::ostream& err) {
  CommandOutput out;
  std::ostringstream text;
  const std::string& cmd = o.command;

  if (cmd == "ols" || cmd == "perturb") {
    const Vector y = response_vector(ds);
    const DesignMatrix x = design_matrix(ds);
    if (cmd == "ols") {
      const OLSFit fit = ols_fit(y, x);
      const auto verdict = significance_contradiction(fit, o.alpha);
      out.result = to_json(fit);
      out.result["contradiction"] = to_json(verdict);
      write_text(text, fit);
      text << '\n';
      write_text(text, verdict);
      out.problematic = verdict.contradiction;
    } else {
      PerturbConfig cfg;
      cfg.tol = o.tol;
      cfg.iterations = o.iterations;
      cfg.noise_mean = o.noise_mean;
      cfg.noise_sd = o.noise_sd;
      cfg.seed = o.seed;
      cfg.threads = o.threads;
      cfg.positions = perturb_positions(x, o);
      const PerturbResult r = perturb_n(y, x, cfg);
      std::vector<std::string> perturbed;
      for (std::size_t c : cfg.positions.empty() ? x.quantitative_positions() : cfg.positions)
        perturbed.push_back(x.labels()[c]);
      out.result = {{"config",
                     {{"tol", cfg.tol},
                      {"iterations", cfg.iterations},
                      {"noise_mean", cfg.noise_mean},
                      {"noise_sd", cfg.noise_sd},
                      {"seed", cfg.seed},
                      {"perturbed", perturbed}}},
                    {"achieved_pct", to_json(r.achieved)},
                    {"change_pct", to_json(r.change)}};
      if (o.samples) {
        out.result["achieved_pct"]["samples"] = r.achieved_pct;
        out.result["change_pct"]["samples"] = r.change_pct;
      }
      text << "Perturbed regressors: " << join(perturbed) << '\n';
      write_text(text, r, cfg);
    }
    out.text = text.str();
    return out;
  }

  const DesignMatrix x = apply_dummy_positions(design_matrix(ds), o, err);
  if (cmd == "rdetr") {
    const auto r = correlation_matrix(x, t);
    out.result = to_json(r);
    write_text(text, r);
    out.problematic = is_problematic(r);
  } else if (cmd == "vif") {
    const auto v = vif(x);
    out.result = to_json(v, "vif");
    write_vif_text(text, v, t);
    out.problematic = is_problematic(v, t);
  } else if (cmd == "cn") {
    const double cn = condition_number(x, true);
    out.result = {{"cn", cn}, {"intercept", x.intercept_present()}, {"verdict", to_string(classify_cn(cn, t))}};
    write_cn_text(text, cn, x.intercept_present(), t);
    out.problematic = classify_cn(cn, t) == CnVerdict::Severe;
  } else if (cmd == "cns") {
    const auto r = cns(x);
    out.result = to_json(r);
    write_text(text, r, t);
    out.problematic = classify_cn(r.cn_with, t) == CnVerdict::Severe;
  } else if (cmd == "ki") {
    const auto r = stewart_index(x);
    out.result = to_json(r);
    write_text(text, r);
  } else if (cmd == "cv") {
    std::vector<LabeledValue> cvs;
    std::vector<LabeledValue> ones;
    for (std::size_t p : x.quantitative_positions())
      cvs.push_back({x.labels()[p], coefficient_of_variation(x.x().column(p))});
    for (std::size_t p : x.dummy_positions()) ones.push_back({x.labels()[p], proportion_of_ones(x.x().column(p))});
    out.result = {{"cv", to_json(cvs, "cv")}, {"ones_pct", to_json(ones, "ones_pct")}};
    write_cv_text(text, cvs, t);
    if (!ones.empty()) write_ones_text(text, ones);
    out.problematic =
        std::any_of(cvs.begin(), cvs.end(), [&](const LabeledValue& v) { return v.value < t.cv_limit; });
  } else if (cmd == "slm") {
    const auto r = slm(x);
    out.result = to_json(r);
    write_text(text, r, t);
    out.problematic = is_problematic(r, t);
  } else if (cmd == "multicol") {
    const auto r = multicol(x, t);
    out.result = to_json(r);
    write_text(text, r, t);
    out.problematic = is_problematic(r, t);
  }
  out.text = text.str();
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Near-multicollinearity diagnostics for linear regression designs", "collin-diag"};
  app.require_subcommand(1, 1);
  for (const auto& [name, help] : kCommands) {
    auto* sub = app.add_subcommand(name, help);
    add_options(sub, o);
    sub->callback([&o, name = name] { o.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Thresholds t = Thresholds::from_environment();
    const Dataset ds = load_dataset(o);
    const CommandOutput res = run_command(o, ds, t, err);
    if (o.format == "json") {
      nlohmann::json doc{{"schema_version", kJsonSchemaVersion},
                         {"command", o.command},
                         {"dataset", ds.name()},
                         {"n", ds.n()},
                         {"problematic", res.problematic},
                         {"result", res.result}};
      out << doc.dump(2) << '\n';
    } else {
      out << res.text;
    }
    return o.fail_on_problematic && res.problematic ? 1 : 0;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return 2;
  }
}

}  // namespace collin
