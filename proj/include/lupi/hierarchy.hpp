#pragma once

#include <vector>

#include "lupi/types.hpp"

namespace lupi {

// Poisson(tau) probability mass truncated to levels 0..max_level and
// renormalized.
LevelDistribution poisson_levels(double tau, int max_level);

// Quantal best-response ladder: levels[0] is uniform and levels[k] logit-best
// responds to the level-weight mixture of levels 0..k-1.
struct Hierarchy {
  std::vector<Strategy> levels;
  double lambda = 0.0;
  GameSpec spec;
  // Set when some level's mixture denominator (the level weights below it)
  // was zero and uniform weights were substituted.
  bool used_uniform_fallback = false;

  int max_level() const { return static_cast<int>(levels.size()) - 1; }
};

Hierarchy build_hierarchy(const Eigen::Ref<const LevelDistribution>& level_dist,
                          double lambda, const GameSpec& spec);

// Aggregate action distribution: sum_l level_dist[l] * levels[l].
Strategy predict(const Eigen::Ref<const LevelDistribution>& level_dist,
                 const Hierarchy& hierarchy);

// Uniformly spaced search grid over [lo, hi]; count == 1 degenerates to {lo}.
struct GridSpec {
  double lo = 1.0;
  double hi = 20.0;
  int count = 500;
};

std::vector<double> grid_points(const GridSpec& grid);

struct LambdaFit {
  double lambda = 0.0;
  double log_likelihood = 0.0;
};

// Maximum-likelihood precision search for a fixed level distribution: scores
// every grid point by sum_a counts[a] * ln(predicted[a]) and returns the best
// (ties go to the smaller lambda). Grid points are evaluated independently.
LambdaFit fit_lambda(const Eigen::Ref<const Vector>& counts,
                     const Eigen::Ref<const LevelDistribution>& level_dist,
                     const GameSpec& spec, const GridSpec& grid);

// Same search with the level distribution built from a truncated Poisson(tau).
LambdaFit fit_lambda(const Eigen::Ref<const Vector>& counts, double tau,
                     int max_level, const GameSpec& spec, const GridSpec& grid);

}  // namespace lupi
