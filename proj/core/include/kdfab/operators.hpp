#pragma once

#include <complex>
#include <vector>

#include "kdfab/state.hpp"

namespace kdfab {

// Dense complex matrix over L2(G) in the delta basis; row and column indices
// follow the canonical element order.
class Operator {
public:
  explicit Operator(Group g);

  static Operator identity(const Group& g);
  static Operator projector(const StateVector& psi);  // |psi><psi|
  static Operator diagonal(const Group& g, const std::vector<std::complex<double>>& d);

  const Group& group() const { return group_; }
  int dim() const { return group_.order(); }

  std::complex<double>& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * dim() + c];
  }
  const std::complex<double>& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * dim() + c];
  }
  std::vector<std::complex<double>>& entries() { return entries_; }
  const std::vector<std::complex<double>>& entries() const { return entries_; }

  std::complex<double> trace() const;
  Operator dagger() const;
  double hermiticity_error() const;  // max entrywise |A - A^dagger|
  double max_abs() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(std::complex<double> s);

private:
  Group group_;
  std::vector<std::complex<double>> entries_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(std::complex<double> s, Operator a);
Operator matmul(const Operator& a, const Operator& b);
StateVector apply(const Operator& a, const StateVector& psi);
double max_abs_diff(const Operator& a, const Operator& b);

// Ascending eigenvalues of a Hermitian operator, via cyclic Jacobi sweeps on
// the 2n x 2n real symmetric embedding [[Re, -Im], [Im, Re]]. Rejects inputs
// whose hermiticity error exceeds 1e-8.
std::vector<double> hermitian_eigenvalues(const Operator& a);

// Density-matrix diagnostics: Hermitian within tolerance, PSD up to psd_tol,
// trace 1 up to trace_tol.
struct StateCheck {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool is_state = false;
};
StateCheck check_density(const Operator& rho, double psd_tol = 1e-9,
                         double trace_tol = 1e-10, double herm_tol = 1e-10);

// PSD trace-1 refinement of Operator; construction validates.
struct DensityState {
  Operator op;
};
DensityState make_density(const Operator& rho);

}  // namespace kdfab
