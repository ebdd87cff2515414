#pragma once

#include <vector>

#include "lupi/hierarchy.hpp"
#include "lupi/types.hpp"

namespace lupi {

// One agent's observed play, reduced to an empirical action frequency.
struct AgentTrace {
  int agent_id = 0;
  std::vector<int> choices;  // 1-based actions
  Vector freq;               // length num_actions, sums to 1
};

AgentTrace make_trace(int agent_id, std::vector<int> choices, int num_actions);

// Level-weight estimate for one agent: beta lies on the simplex over levels
// 0..max_level and minimizes || freq - sum_l beta[l] * levels[l] ||^2.
struct AgentFit {
  int agent_id = 0;
  LevelDistribution beta;
  double residual = 0.0;    // objective value at the optimum
  double mean_level = 0.0;  // sum_l l * beta[l]
};

enum class ClrMethod {
  Auto,  // active set for small level counts, projected gradient otherwise
  ActiveSet,
  ProjectedGradient,
};

// Reusable scratch for repeated fits against the same hierarchy (Gram matrix
// and per-level inner products are cached across calls).
class ClrWorkspace {
 public:
  explicit ClrWorkspace(const Hierarchy& hierarchy);

  AgentFit fit(const AgentTrace& trace, ClrMethod method = ClrMethod::Auto) const;

  int num_levels() const { return static_cast<int>(gram_.rows()); }

 private:
  const Hierarchy* hierarchy_;
  Eigen::MatrixXd gram_;  // levels^T levels
};

// One-shot convenience wrapper around ClrWorkspace.
AgentFit clr_fit(const AgentTrace& trace, const Hierarchy& hierarchy,
                 ClrMethod method = ClrMethod::Auto);

// Euclidean projection onto the probability simplex.
Vector project_to_simplex(const Eigen::Ref<const Vector>& point);

}  // namespace lupi
