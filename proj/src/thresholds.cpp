#include "collin/thresholds.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <string>

#include "collin/errors.hpp"

namespace collin {

void Thresholds::validate() const {
  const std::map<std::string, double> fields{
      {"pairwise_corr", pairwise_corr}, {"det_r_intercept_a", det_r_intercept_a},
      {"det_r_n_coef", det_r_n_coef},   {"det_r_k_coef", det_r_k_coef},
      {"vif_limit", vif_limit},         {"cn_moderate", cn_moderate},
      {"cn_severe", cn_severe},         {"cv_limit", cv_limit}};
  for (const auto& [key, value] : fields)
    if (!(value > 0.0)) throw DataError("threshold '" + key + "' must be positive");
  if (!(cn_moderate < cn_severe)) throw DataError("threshold cn_moderate must be below cn_severe");
}

Thresholds Thresholds::parse(std::istream& in) {
  Thresholds t;
  const std::map<std::string, double Thresholds::*> fields{
      {"pairwise_corr", &Thresholds::pairwise_corr},
      {"det_r_intercept_a", &Thresholds::det_r_intercept_a},
      {"det_r_n_coef", &Thresholds::det_r_n_coef},
      {"det_r_k_coef", &Thresholds::det_r_k_coef},
      {"vif_limit", &Thresholds::vif_limit},
      {"cn_moderate", &Thresholds::cn_moderate},
      {"cn_severe", &Thresholds::cn_severe},
      {"cv_limit", &Thresholds::cv_limit}};

  auto strip = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError("thresholds line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    auto it = fields.find(key);
    if (it == fields.end())
      throw DataError("thresholds line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size())
      throw DataError("thresholds line " + std::to_string(lineno) + ": bad number '" + value + "'");
    t.*(it->second) = v;
  }
  t.validate();
  return t;
}

Thresholds Thresholds::from_environment() {
  const char* path = std::getenv(kThresholdsEnvVar);
  if (path == nullptr || *path == '\0') return {};
  std::ifstream in(path);
  if (!in) throw DataError(std::string("cannot open thresholds file '") + path + "'");
  return parse(in);
}

}  // namespace collin
