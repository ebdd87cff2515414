#pragma once

#include "lupi/types.hpp"

namespace lupi {

// Probability that a player choosing `action` wins the LUPI game when every
// opponent plays `opponent` and the opponent count is Poisson(mean_players).
// Opponent counts per number are then independent Poissons, so the player
// wins iff nobody else picked `action` and no lower number was picked by
// exactly one opponent:
//   exp(-n*p_k) * prod_{j<k} (1 - n*p_j * exp(-n*p_j))
double win_probability(int action, const Eigen::Ref<const Strategy>& opponent,
                       const GameSpec& spec);

// prize * win_probability for every action, computed in one O(K) sweep by
// accumulating the blocking prefix product.
Vector expected_utilities(const Eigen::Ref<const Strategy>& opponent,
                          const GameSpec& spec);

// Logit response: probs[k] proportional to exp(lambda * utilities[k]).
// The max exponent is subtracted before exponentiating, so lambda values up
// to ~1e4 cannot overflow. lambda = 0 yields the uniform strategy.
Strategy quantal_response(const Eigen::Ref<const Vector>& utilities,
                          double lambda);

}  // namespace lupi
