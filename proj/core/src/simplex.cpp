#include "kdfab/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kdfab {

namespace {

constexpr double kReducedCostTol = 1e-12;
constexpr double kPivotTol = 1e-12;
constexpr double kFeasibilityTol = 1e-8;

struct Tableau {
  int m = 0;       // constraint rows
  int n = 0;       // structural columns
  int width = 0;   // n + m + 1 (structural, artificial, rhs)
  std::vector<double> t;       // (m+1) x width; last row is the objective
  std::vector<int> basis;      // basic variable per row

  double& at(int r, int c) { return t[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return t[static_cast<std::size_t>(r) * width + c]; }
};

void pivot(Tableau& tb, int row, int col) {
  const double p = tb.at(row, col);
  for (int c = 0; c < tb.width; ++c) tb.at(row, c) /= p;
  for (int r = 0; r <= tb.m; ++r) {
    if (r == row) continue;
    const double f = tb.at(r, col);
    if (f == 0.0) continue;
    for (int c = 0; c < tb.width; ++c) tb.at(r, c) -= f * tb.at(row, c);
  }
  tb.basis[row] = col;
}

}  // namespace

LPOutcome lp_feasibility(const LPProblem& p) {
  const int m = p.rows;
  const int n = p.cols;
  if (m < 1 || n < 1) throw std::invalid_argument("lp_feasibility: empty problem");
  if (n > 10000) throw std::invalid_argument("lp_feasibility: too many columns");
  if (static_cast<int>(p.a.size()) != m * n || static_cast<int>(p.b.size()) != m) {
    throw std::invalid_argument("lp_feasibility: dimension mismatch");
  }
  for (double v : p.a) {
    if (!std::isfinite(v)) throw std::invalid_argument("lp_feasibility: non-finite entry");
  }
  for (double v : p.b) {
    if (!std::isfinite(v)) throw std::invalid_argument("lp_feasibility: non-finite entry");
  }

  // Scale so the right-hand side has unit max-norm; lambda is rescaled back
  // on the way out and certificates are unaffected.
  double scale = 0.0;
  for (double v : p.b) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;

  // Phase 1: minimize the sum of artificial variables for
  // [A | I] (lambda; s) = b with b flipped nonnegative.
  std::vector<double> row_sign(m, 1.0);
  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.width = n + m + 1;
  tb.t.assign(static_cast<std::size_t>(m + 1) * tb.width, 0.0);
  tb.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    row_sign[r] = p.b[r] < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) tb.at(r, c) = row_sign[r] * p.a[static_cast<std::size_t>(r) * n + c];
    tb.at(r, n + r) = 1.0;
    tb.at(r, n + m) = row_sign[r] * p.b[r] / scale;
    tb.basis[r] = n + r;
  }
  // Objective row holds reduced costs c_j - z_j for the phase-1 costs
  // (0 on structural, 1 on artificial columns).
  for (int c = 0; c < n; ++c) {
    double colsum = 0.0;
    for (int r = 0; r < m; ++r) colsum += tb.at(r, c);
    tb.at(m, c) = -colsum;
  }
  for (int r = 0; r < m; ++r) tb.at(m, n + m) -= tb.at(r, n + m);

  const int max_iterations = 2000 + 64 * (m + n);
  int iterations = 0;
  while (true) {
    // Bland: entering = smallest-index column with negative reduced cost.
    int enter = -1;
    for (int c = 0; c < n + m; ++c) {
      if (tb.at(m, c) < -kReducedCostTol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    // Ratio test; ties broken by smallest basic variable index (Bland).
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      const double a = tb.at(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = tb.at(r, n + m) / a;
      if (ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 &&
           (leave < 0 || tb.basis[r] < tb.basis[leave]))) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) throw std::runtime_error("lp_feasibility: phase-1 unbounded");
    pivot(tb, leave, enter);
    if (++iterations > max_iterations) {
      throw std::runtime_error("lp_feasibility: cycling guard tripped");
    }
  }

  LPOutcome out;
  out.iterations = iterations;
  const double objective = -tb.at(m, n + m);

  if (objective > kFeasibilityTol) {
    // Infeasible. Phase-1 dual y (y_i = 1 - reduced cost of artificial i)
    // satisfies y^T A <= 0, y^T b > 0 in the flipped space; unflip and
    // normalize to unit max-norm.
    std::vector<double> y(m);
    double ymax = 0.0;
    for (int r = 0; r < m; ++r) {
      y[r] = row_sign[r] * (1.0 - tb.at(m, n + r));
      ymax = std::max(ymax, std::abs(y[r]));
    }
    if (ymax == 0.0) throw std::runtime_error("lp_feasibility: degenerate certificate");
    for (auto& v : y) v /= ymax;
    double max_col = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < n; ++c) {
      double dot = 0.0;
      for (int r = 0; r < m; ++r) dot += y[r] * p.a[static_cast<std::size_t>(r) * n + c];
      max_col = std::max(max_col, dot);
    }
    double rhs = 0.0;
    for (int r = 0; r < m; ++r) rhs += y[r] * p.b[r];
    if (max_col > 1e-10 || rhs <= kFeasibilityTol * scale) {
      throw std::runtime_error("lp_feasibility: Farkas certificate failed verification");
    }
    out.feasible = false;
    out.certificate = std::move(y);
    out.certificate_max_column = max_col;
    out.certificate_rhs = rhs;
    return out;
  }

  // Feasible: read the structural variables off the basis and rescale.
  std::vector<double> lambda(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (tb.basis[r] < n) lambda[tb.basis[r]] = tb.at(r, n + m) * scale;
  }
  double residual = 0.0;
  double min_lambda = 0.0;
  for (double v : lambda) min_lambda = std::min(min_lambda, v);
  for (int r = 0; r < m; ++r) {
    double dot = 0.0;
    for (int c = 0; c < n; ++c) dot += p.a[static_cast<std::size_t>(r) * n + c] * lambda[c];
    residual = std::max(residual, std::abs(dot - p.b[r]));
  }
  if (residual > kFeasibilityTol * scale || min_lambda < -1e-10) {
    throw std::runtime_error("lp_feasibility: feasible solution failed verification");
  }
  out.feasible = true;
  out.weights = std::move(lambda);
  out.primal_residual = residual;
  return out;
}

}  // namespace kdfab
