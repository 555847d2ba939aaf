#include "collin/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace collin {

void PerturbConfig::validate(const DesignMatrix& x) const {
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw DataError("perturbation tol must be non-negative");
  if (iterations < 1) throw DataError("perturbation needs at least one iteration");
  if (!(noise_sd > 0.0)) throw DataError("perturbation noise sd must be positive");
  for (std::size_t p : positions) {
    const auto& q = x.quantitative_positions();
    if (!std::binary_search(q.begin(), q.end(), p))
      throw DataError("perturbation position " + std::to_string(p) +
                      " is not a quantitative regressor (only quantitative variables can be perturbed)");
  }
  if (positions.empty() && x.quantitative_positions().empty())
    throw DataError("perturbation needs at least one quantitative regressor");
}

Vector perturb_column(std::span<const double> x, double tol, std::span<const double> r) {
  if (x.size() != r.size()) throw DataError("perturb_column: noise length differs from column");
  const double nx = norm2(x);
  const double nr = norm2(r);
  if (nx == 0.0) throw DataError("perturb_column: column has zero norm");
  if (nr == 0.0) throw DataError("perturb_column: noise vector has zero norm");
  const double scale = tol * nx / nr;
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + scale * r[i];
  return out;
}

namespace {

std::vector<std::size_t> selected_columns(const DesignMatrix& x, const PerturbConfig& cfg) {
  return cfg.positions.empty() ? x.quantitative_positions() : cfg.positions;
}

PerturbDraw draw_once(std::span<const double> y, const Matrix& x, std::span<const std::size_t> cols,
                      std::span<const double> beta, double beta_norm, const PerturbConfig& cfg,
                      std::mt19937_64& rng) {
  constexpr int kMaxRetries = 10;
  std::normal_distribution<double> noise(cfg.noise_mean, cfg.noise_sd);
  Vector r(x.rows());
  for (int attempt = 0;; ++attempt) {
    Matrix xp = x;
    double diff_sq = 0.0;
    double base_sq = 0.0;
    for (std::size_t c : cols) {
      for (double& v : r) v = noise(rng);
      const Vector col = x.column(c);
      const Vector pert = perturb_column(col, cfg.tol, r);
      for (std::size_t i = 0; i < col.size(); ++i) diff_sq += (pert[i] - col[i]) * (pert[i] - col[i]);
      base_sq += dot(col, col);
      xp.set_column(c, pert);
    }
    try {
      const Vector bp = least_squares(xp, y);
      Vector d(beta.size());
      for (std::size_t j = 0; j < d.size(); ++j) d[j] = beta[j] - bp[j];
      return {100.0 * std::sqrt(diff_sq / base_sq), 100.0 * norm2(d) / beta_norm};
    } catch (const SingularMatrixError&) {
      if (attempt + 1 >= kMaxRetries) throw;
    }
  }
}

std::mt19937_64 engine_for(std::uint64_t seed, std::size_t iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(iteration) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

PerturbDraw perturb_once(std::span<const double> y, const DesignMatrix& x, const PerturbConfig& cfg,
                         std::mt19937_64& rng) {
  cfg.validate(x);
  const Vector beta = least_squares(x.x(), y);
  const double beta_norm = norm2(beta);
  if (beta_norm == 0.0) throw DataError("perturbation: estimated coefficients are all zero");
  const auto cols = selected_columns(x, cfg);
  return draw_once(y, x.x(), cols, beta, beta_norm, cfg, rng);
}

PerturbResult perturb_n(std::span<const double> y, const DesignMatrix& x, const PerturbConfig& cfg) {
  cfg.validate(x);
  const Vector beta = least_squares(x.x(), y);
  const double beta_norm = norm2(beta);
  if (beta_norm == 0.0) throw DataError("perturbation: estimated coefficients are all zero");
  const auto cols = selected_columns(x, cfg);

  PerturbResult res;
  res.achieved_pct.resize(cfg.iterations);
  res.change_pct.resize(cfg.iterations);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = engine_for(cfg.seed, i);
      const auto d = draw_once(y, x.x(), cols, beta, beta_norm, cfg, rng);
      res.achieved_pct[i] = d.achieved_pct;
      res.change_pct[i] = d.change_pct;
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(cfg.threads, 1, cfg.iterations);
  if (workers == 1) {
    run_range(0, cfg.iterations);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (cfg.iterations + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk;
      const std::size_t e = std::min(cfg.iterations, b + chunk);
      pool.emplace_back([&, w, b, e] {
        try {
          run_range(b, e);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  res.achieved = summarize(res.achieved_pct);
  res.change = summarize(res.change_pct);
  return res;
}

double quantile(std::span<const double> sample, double prob) {
  if (sample.empty()) throw DataError("quantile of an empty sample");
  if (!(prob >= 0.0 && prob <= 1.0)) throw DataError("quantile probability outside [0, 1]");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = static_cast<double>(sorted.size() - 1) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

SampleSummary summarize(std::span<const double> sample) {
  if (sample.empty()) throw DataError("summary of an empty sample");
  SampleSummary s;
  const double n = static_cast<double>(sample.size());
  s.mean = std::accumulate(sample.begin(), sample.end(), 0.0) / n;
  if (sample.size() > 1) {
    double ss = 0.0;
    for (double v : sample) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (n - 1.0));
  }
  const auto [mn, mx] = std::minmax_element(sample.begin(), sample.end());
  s.min = *mn;
  s.max = *mx;
  s.q025 = quantile(sample, 0.025);
  s.q975 = quantile(sample, 0.975);
  return s;
}

}  // namespace collin
