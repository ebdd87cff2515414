#pragma once

#include "lupi/types.hpp"

namespace lupi {

struct PneOptions {
  // Tolerance on |sum(p) - 1| of the returned strategy.
  double tol = 1e-12;
  // Cap on the support length; 0 means num_actions.
  int max_support = 0;
  // Initial bisection bracket for p_1. The equilibrium is unique, so any
  // bracket containing it yields the same strategy.
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  int max_bisect = 200;
};

struct PneResult {
  Strategy probs;
  int support_size = 0;
  // sum(p) - 1 of the returned strategy.
  double sum_residual = 0.0;
  // Largest violation of the supported-pair recursion
  // p_k - p_{k+1} = -(1/n) ln(1 - n p_k exp(-n p_k)).
  double recursion_residual = 0.0;
  // max - min expected utility over the support (indifference check).
  double utility_spread = 0.0;
  int iterations = 0;
};

// Poisson-Nash equilibrium of the LUPI game. Bisects on p_1: each candidate
// p_1 is extended by the indifference recursion until the next entry would be
// nonpositive, and the bracket is narrowed on the accumulated sum vs 1.
// Entries beyond the recursion's stopping point are exactly zero; the solver
// verifies that no zero-probability action beats the support before
// returning. Throws SolverError if the bracket cannot reach `tol`.
PneResult solve_pne(const GameSpec& spec, const PneOptions& options = {});

}  // namespace lupi
