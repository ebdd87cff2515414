#pragma once

#include <string>
#include <vector>

#include "lupi/types.hpp"

namespace lupi {

// sum_a counts[a] * ln(max(predicted[a], 1e-300)).
double log_likelihood(const Eigen::Ref<const Vector>& counts,
                      const Eigen::Ref<const Strategy>& predicted);

struct ChiSquaredBin {
  int first_action = 0;  // 1-based, inclusive
  int last_action = 0;   // inclusive
  double observed = 0.0;
  double expected = 0.0;
};

struct ChiSquaredResult {
  double statistic = 0.0;
  int df = 0;
  std::vector<ChiSquaredBin> bins;
  bool low_expected_warning = false;  // some bin expects fewer than 5 counts
};

// Pearson statistic over consecutive action bins. Observed entries are
// average daily counts; expected counts are submissions_per_day times the
// predicted mass of each bin. df = num_bins - 1.
ChiSquaredResult chi_squared(const Eigen::Ref<const Vector>& observed_avg_counts,
                             const Eigen::Ref<const Strategy>& predicted,
                             double submissions_per_day, int bin_size = 2,
                             int num_bins = 6);

// Overlap of two densities as a percentage: 100 * sum_a min(emp, pred).
double proportion_below(const Eigen::Ref<const Strategy>& empirical,
                        const Eigen::Ref<const Strategy>& predicted);

// Exact W1 distance for distributions on the unit-spaced grid 1..K:
// sum_k |CDF_a(k) - CDF_b(k)|.
double wasserstein_1d(const Eigen::Ref<const Strategy>& a,
                      const Eigen::Ref<const Strategy>& b);

// "", "*", "**", or "***" at the 10% / 5% / 1% levels; df must be 5 (the
// only table shape we report).
std::string significance_stars(double chi2_statistic, int df);

}  // namespace lupi
