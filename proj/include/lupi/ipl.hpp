#pragma once

#include <cstdint>
#include <vector>

#include "lupi/clr.hpp"
#include "lupi/hierarchy.hpp"
#include "lupi/types.hpp"

namespace lupi {

// Simple average of per-agent level weights.
LevelDistribution aggregate(const std::vector<AgentFit>& fits);

struct IplOptions {
  double epsilon = 1e-4;  // L2 convergence threshold on the population vector
  int max_iter = 100;
  std::uint64_t seed = 0;
  int max_level = 40;
  ClrMethod method = ClrMethod::Auto;
};

// One entry per completed iteration: the population vector fed into the update
// and the pooled-count log-likelihood of its prediction.
struct IplIterate {
  LevelDistribution population;
  double log_likelihood = 0.0;
};

struct IplResult {
  LevelDistribution population;
  Hierarchy hierarchy;  // built from population
  std::vector<AgentFit> agent_fits;
  int iterations = 0;
  bool converged = false;
  double log_likelihood = 0.0;
  std::vector<IplIterate> trajectory;
  IplOptions options;
};

// Alternates hierarchy construction, per-agent regression, and aggregation
// from a random start until the population vector moves less than epsilon in
// L2 norm. If max_iter is exhausted, returns the visited population whose
// prediction scored the best pooled log-likelihood.
IplResult ipl_run(const std::vector<AgentTrace>& traces, double lambda,
                  const GameSpec& spec, const IplOptions& options = {});

struct IplLambdaFit {
  IplResult result;
  double lambda = 0.0;
};

// Outer grid search over lambda with several random restarts per grid point
// (restart r uses seed options.seed + r). Best final log-likelihood wins;
// ties go to the smaller lambda, then the lower restart index.
IplLambdaFit ipl_fit_lambda(const std::vector<AgentTrace>& traces,
                            const GameSpec& spec, const GridSpec& grid,
                            const IplOptions& options = {}, int restarts = 5);

// Distance moved by one more full update step from result.population;
// converged results satisfy residual < epsilon by construction.
double fixed_point_residual(const IplResult& result,
                            const std::vector<AgentTrace>& traces,
                            const GameSpec& spec);

}  // namespace lupi
