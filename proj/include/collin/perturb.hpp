#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "collin/dataset.hpp"

namespace collin {

struct PerturbConfig {
  double tol = 0.01;          // relative perturbation magnitude
  std::size_t iterations = 5000;
  double noise_mean = 10.0;   // the noise vector is rescaled, so only its direction matters
  double noise_sd = 10.0;
  /// Columns of X to perturb (0-based, intercept = 0). Empty means every quantitative column.
  std::vector<std::size_t> positions;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  void validate(const DesignMatrix& x) const;
};

struct PerturbDraw {
  double achieved_pct = 0.0;
  double change_pct = 0.0;
};

struct SampleSummary {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
  double q025 = 0.0;
  double q975 = 0.0;
  friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

struct PerturbResult {
  std::vector<double> achieved_pct;
  std::vector<double> change_pct;
  SampleSummary achieved;
  SampleSummary change;
  friend bool operator==(const PerturbResult&, const PerturbResult&) = default;
};

/// x + tol * r * ||x|| / ||r||
Vector perturb_column(std::span<const double> x, double tol, std::span<const double> r);

/// One perturbation of the selected columns followed by a refit (y unchanged).
PerturbDraw perturb_once(std::span<const double> y, const DesignMatrix& x, const PerturbConfig& cfg,
                         std::mt19937_64& rng);

/// cfg.iterations independent draws. Draw i uses an engine seeded from (cfg.seed, i), so the
/// result does not depend on cfg.threads.
PerturbResult perturb_n(std::span<const double> y, const DesignMatrix& x, const PerturbConfig& cfg);

/// Mean, sample sd, extremes and 2.5% / 97.5% quantiles (linear interpolation between order
/// statistics).
SampleSummary summarize(std::span<const double> sample);
double quantile(std::span<const double> sample, double prob);

}  // namespace collin
