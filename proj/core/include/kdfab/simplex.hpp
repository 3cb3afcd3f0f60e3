#pragma once

#include <vector>

namespace kdfab {

// Feasibility problem: find lambda >= 0 with A lambda = b.
struct LPProblem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // row-major, rows x cols
  std::vector<double> b;  // rows
};

// Either nonnegative weights solving A lambda = b within 1e-8, or a Farkas
// certificate y (unit max-norm) with y^T A <= 0 entrywise and y^T b > 0
// proving infeasibility. Both sides are re-verified before returning.
struct LPOutcome {
  bool feasible = false;
  std::vector<double> weights;      // size cols when feasible
  std::vector<double> certificate;  // size rows when infeasible
  double primal_residual = 0.0;     // ||A lambda - b||_inf
  double certificate_max_column = 0.0;  // max_j y^T A_j
  double certificate_rhs = 0.0;         // y^T b
  int iterations = 0;
};

// Phase-1 dense simplex with Bland's anti-cycling rule; the phase-1 dual
// solution supplies the Farkas certificate. Deterministic for a given input.
LPOutcome lp_feasibility(const LPProblem& p);

}  // namespace kdfab
