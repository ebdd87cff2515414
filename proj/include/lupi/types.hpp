#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace lupi {

using Vector = Eigen::VectorXd;

// Probability vector over the K actions; entry i holds the probability of
// choosing integer i+1 (all public interfaces speak in 1-indexed actions).
using Strategy = Vector;

// Probability vector over reasoning levels 0..m.
using LevelDistribution = Vector;

// The Poisson LUPI game: actions 1..num_actions, the number of opponents is
// Poisson with mean mean_players, the unique lowest number earns prize.
struct GameSpec {
  int num_actions = 99;
  double mean_players = 26.9;
  double prize = 1.0;
};

// Thrown when an iterative solver exhausts its budget; carries the best
// residual seen so the caller can report how close it got.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

// File loading failure with the offending 1-based line number (0 = whole file).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

void validate(const GameSpec& spec);

// True when v is entrywise >= 0 and sums to 1 within tol.
bool is_distribution(const Eigen::Ref<const Vector>& v, double tol = 1e-9);

// Throws std::invalid_argument naming `what` if v is not a distribution.
void require_distribution(const char* what, const Eigen::Ref<const Vector>& v,
                          double tol = 1e-9);

Strategy uniform_strategy(int num_actions);

}  // namespace lupi
