#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kdfab::detail {

// Rank of a row-major rows x cols matrix by Gaussian elimination with
// partial pivoting; pivots below pivot_tol count as zero.
inline int matrix_rank(std::vector<double> m, int rows, int cols, double pivot_tol) {
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    double best = pivot_tol;
    for (int r = rank; r < rows; ++r) {
      const double v = std::abs(m[static_cast<std::size_t>(r) * cols + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c) {
        std::swap(m[static_cast<std::size_t>(pivot) * cols + c],
                  m[static_cast<std::size_t>(rank) * cols + c]);
      }
    }
    const double p = m[static_cast<std::size_t>(rank) * cols + col];
    for (int r = rank + 1; r < rows; ++r) {
      const double f = m[static_cast<std::size_t>(r) * cols + col] / p;
      if (f == 0.0) continue;
      for (int c = col; c < cols; ++c) {
        m[static_cast<std::size_t>(r) * cols + c] -= f * m[static_cast<std::size_t>(rank) * cols + c];
      }
    }
    ++rank;
  }
  return rank;
}

// Solves the symmetric positive definite system a x = b in place (Cholesky).
inline std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, int n) {
  for (int j = 0; j < n; ++j) {
    double d = a[static_cast<std::size_t>(j) * n + j];
    for (int k = 0; k < j; ++k) {
      const double l = a[static_cast<std::size_t>(j) * n + k];
      d -= l * l;
    }
    if (d <= 0.0) throw std::runtime_error("solve_spd: matrix not positive definite");
    const double ljj = std::sqrt(d);
    a[static_cast<std::size_t>(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = a[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < j; ++k) {
        s -= a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(j) * n + k];
      }
      a[static_cast<std::size_t>(i) * n + j] = s / ljj;
    }
  }
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= a[static_cast<std::size_t>(i) * n + k] * b[k];
    b[i] = s / a[static_cast<std::size_t>(i) * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= a[static_cast<std::size_t>(k) * n + i] * b[k];
    b[i] = s / a[static_cast<std::size_t>(i) * n + i];
  }
  return b;
}

}  // namespace kdfab::detail
