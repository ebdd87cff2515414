#include "lupi/types.hpp"

#include <cmath>
#include <sstream>

namespace lupi {

void validate(const GameSpec& spec) {
  if (spec.num_actions < 2)
    throw std::invalid_argument("GameSpec: num_actions must be >= 2");
  if (!std::isfinite(spec.mean_players) || spec.mean_players <= 0.0)
    throw std::invalid_argument("GameSpec: mean_players must be positive");
  if (!std::isfinite(spec.prize) || spec.prize <= 0.0)
    throw std::invalid_argument("GameSpec: prize must be positive");
}

bool is_distribution(const Eigen::Ref<const Vector>& v, double tol) {
  if (v.size() == 0) return false;
  if ((v.array() < -tol).any()) return false;
  if (!v.allFinite()) return false;
  return std::abs(v.sum() - 1.0) <= tol;
}

void require_distribution(const char* what, const Eigen::Ref<const Vector>& v,
                          double tol) {
  if (is_distribution(v, tol)) return;
  std::ostringstream msg;
  msg << what << " is not a probability vector (size " << v.size();
  if (v.size() > 0) msg << ", sum " << v.sum() << ", min " << v.minCoeff();
  msg << ")";
  throw std::invalid_argument(msg.str());
}

Strategy uniform_strategy(int num_actions) {
  if (num_actions < 1)
    throw std::invalid_argument("uniform_strategy: need at least one action");
  return Strategy::Constant(num_actions, 1.0 / num_actions);
}

}  // namespace lupi
