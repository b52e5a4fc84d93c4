#pragma once

// Discrete minimax fit with coefficient boxes as a linear program:
//
//   minimize t  subject to  |f(x_j) - q(x_j)| <= t  for every grid point x_j,
//                           a_i <= c_{k_i} <= b_i   for every finite bound.
//
// The program has n + 2 variables and up to 2N + 2m constraints, so it is solved
// through its dual (n + 2 equality rows, one column per constraint) with a revised
// simplex method that prices grid columns on the fly. The optimal simplex
// multipliers are the primal coefficients.

#include "uniqmod/instance.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace uniqmod {

class LpNonconvergence : public std::runtime_error {
 public:
  LpNonconvergence(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  /// Objective value after each iteration.
  const std::vector<double>& trace() const { return trace_; }

 private:
  std::vector<double> trace_;
};

struct MinimaxLpResult {
  std::vector<double> coeffs;  ///< c_0..c_n
  double value = 0.0;          ///< optimal t
  int phase1_iterations = 0;
  int phase2_iterations = 0;
};

struct MinimaxLpOptions {
  int max_iterations = 50'000;
  int refactor_every = 32;
};

MinimaxLpResult solve_minimax_lp(std::span<const double> nodes, std::span<const double> values,
                                 const ConstraintSet& K, const MinimaxLpOptions& options = {});

}  // namespace uniqmod
