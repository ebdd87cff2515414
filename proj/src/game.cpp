#include "lupi/game.hpp"

#include <cmath>
#include <stdexcept>

namespace lupi {

namespace {

// Probability that the Poisson(n * p) count on one number is anything but
// exactly one — the number then cannot be the unique lowest.
inline double blocked_factor(double n, double p) {
  return 1.0 - n * p * std::exp(-n * p);
}

}  // namespace

double win_probability(int action, const Eigen::Ref<const Strategy>& opponent,
                       const GameSpec& spec) {
  validate(spec);
  require_distribution("opponent strategy", opponent);
  if (opponent.size() != spec.num_actions)
    throw std::invalid_argument("opponent strategy size does not match game");
  if (action < 1 || action > spec.num_actions)
    throw std::invalid_argument("action out of range");

  const double n = spec.mean_players;
  double prob = std::exp(-n * opponent[action - 1]);
  for (int j = 0; j < action - 1; ++j) prob *= blocked_factor(n, opponent[j]);
  return prob;
}

Vector expected_utilities(const Eigen::Ref<const Strategy>& opponent,
                          const GameSpec& spec) {
  validate(spec);
  require_distribution("opponent strategy", opponent);
  if (opponent.size() != spec.num_actions)
    throw std::invalid_argument("opponent strategy size does not match game");

  const double n = spec.mean_players;
  const int k_max = spec.num_actions;
  Vector utilities(k_max);
  double lower_open = 1.0;  // probability no number below k is uniquely picked
  for (int k = 0; k < k_max; ++k) {
    utilities[k] = spec.prize * std::exp(-n * opponent[k]) * lower_open;
    lower_open *= blocked_factor(n, opponent[k]);
  }
  return utilities;
}

Strategy quantal_response(const Eigen::Ref<const Vector>& utilities,
                          double lambda) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("quantal_response: lambda must be >= 0");
  if (utilities.size() == 0 || !utilities.allFinite())
    throw std::invalid_argument("quantal_response: utilities must be finite");

  const Vector scaled = lambda * utilities;
  const Vector exps = (scaled.array() - scaled.maxCoeff()).exp();
  return exps / exps.sum();
}

}  // namespace lupi
