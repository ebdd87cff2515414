#include "lupi/pne.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lupi/game.hpp"

namespace lupi {

namespace {

// Fills p from the leading probability via the indifference recursion
// p_{k+1} = p_k + (1/n) ln(1 - n p_k e^{-n p_k}); entries past the point
// where the recursion leaves (0, inf) stay exactly zero. Returns the sum.
double extend_from(double p1, double n, int max_support, Strategy& p) {
  p.setZero();
  double current = p1;
  double total = 0.0;
  for (int k = 0; k < max_support; ++k) {
    p[k] = current;
    total += current;
    const double arg = -n * current * std::exp(-n * current);
    if (arg <= -1.0) break;  // log argument hit zero; cannot continue
    const double next = current + std::log1p(arg) / n;
    if (!(next > 0.0) || !std::isfinite(next)) break;
    current = next;
  }
  return total;
}

}  // namespace

PneResult solve_pne(const GameSpec& spec, const PneOptions& options) {
  validate(spec);
  if (!(options.tol > 0.0))
    throw std::invalid_argument("solve_pne: tol must be positive");
  if (options.max_support < 0)
    throw std::invalid_argument("solve_pne: max_support must be >= 0");
  if (!(options.bracket_lo >= 0.0 && options.bracket_hi <= 1.0 &&
        options.bracket_lo < options.bracket_hi))
    throw std::invalid_argument("solve_pne: bracket must satisfy 0 <= lo < hi <= 1");
  if (options.max_bisect < 1)
    throw std::invalid_argument("solve_pne: max_bisect must be >= 1");

  const double n = spec.mean_players;
  const int k_max = spec.num_actions;
  const int max_support = options.max_support == 0
                              ? k_max
                              : std::min(options.max_support, k_max);

  Strategy probs(k_max);
  // The accumulated sum is strictly increasing in p_1, so bisect on the
  // sum-minus-one objective.
  double lo = options.bracket_lo;
  double hi = options.bracket_hi;
  double f_lo = extend_from(lo, n, max_support, probs) - 1.0;
  double f_hi = extend_from(hi, n, max_support, probs) - 1.0;
  if (f_lo > 0.0 || f_hi < 0.0) {
    std::ostringstream msg;
    msg << "solve_pne: bracket [" << lo << ", " << hi
        << "] does not contain the equilibrium leading probability";
    throw SolverError(msg.str(), std::min(std::abs(f_lo), std::abs(f_hi)));
  }

  double best_p1 = lo;
  double best_abs = std::abs(f_lo);
  if (std::abs(f_hi) < best_abs) {
    best_p1 = hi;
    best_abs = std::abs(f_hi);
  }
  int iterations = 0;
  for (; iterations < options.max_bisect; ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at this precision
    const double f_mid = extend_from(mid, n, max_support, probs) - 1.0;
    if (std::abs(f_mid) < best_abs) {
      best_p1 = mid;
      best_abs = std::abs(f_mid);
    }
    if (f_mid == 0.0) break;
    (f_mid < 0.0 ? lo : hi) = mid;
  }

  PneResult result;
  result.probs.resize(k_max);
  const double total = extend_from(best_p1, n, max_support, result.probs);
  result.sum_residual = total - 1.0;
  result.iterations = iterations;
  if (std::abs(result.sum_residual) > options.tol)
    throw SolverError("solve_pne: bisection exhausted before reaching tol",
                      std::abs(result.sum_residual));

  int support = 0;
  while (support < k_max && result.probs[support] > 0.0) ++support;
  result.support_size = support;

  result.recursion_residual = 0.0;
  for (int k = 0; k + 1 < support; ++k) {
    const double pk = result.probs[k];
    const double step = std::log1p(-n * pk * std::exp(-n * pk)) / n;
    const double violation =
        std::abs(result.probs[k + 1] - pk - step);
    result.recursion_residual = std::max(result.recursion_residual, violation);
  }

  const Vector utilities = expected_utilities(result.probs, spec);
  const double supported_max = utilities.head(support).maxCoeff();
  const double supported_min = utilities.head(support).minCoeff();
  result.utility_spread = supported_max - supported_min;
  for (int k = support; k < k_max; ++k) {
    if (utilities[k] > supported_max + 1e-9)
      throw SolverError(
          "solve_pne: a zero-probability action beats the support",
          utilities[k] - supported_max);
  }
  return result;
}

}  // namespace lupi
