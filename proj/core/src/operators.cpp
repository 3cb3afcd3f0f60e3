#include "kdfab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kdfab {

Operator::Operator(Group g)
    : group_(std::move(g)),
      entries_(static_cast<std::size_t>(group_.order()) * group_.order(), 0.0) {}

Operator Operator::identity(const Group& g) {
  Operator a(g);
  for (int i = 0; i < a.dim(); ++i) a.at(i, i) = 1.0;
  return a;
}

Operator Operator::projector(const StateVector& psi) {
  Operator a(psi.group);
  const int n = a.dim();
  if (static_cast<int>(psi.amplitudes.size()) != n) {
    throw std::invalid_argument("amplitude count does not match group order");
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a.at(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
    }
  }
  return a;
}

Operator Operator::diagonal(const Group& g, const std::vector<std::complex<double>>& d) {
  if (static_cast<int>(d.size()) != g.order()) {
    throw std::invalid_argument("diagonal length does not match group order");
  }
  Operator a(g);
  for (int i = 0; i < a.dim(); ++i) a.at(i, i) = d[i];
  return a;
}

std::complex<double> Operator::trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

Operator Operator::dagger() const {
  Operator a(group_);
  for (int r = 0; r < dim(); ++r) {
    for (int c = 0; c < dim(); ++c) a.at(r, c) = std::conj(at(c, r));
  }
  return a;
}

double Operator::hermiticity_error() const {
  double m = 0.0;
  for (int r = 0; r < dim(); ++r) {
    for (int c = r; c < dim(); ++c) {
      m = std::max(m, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return m;
}

double Operator::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

Operator& Operator::operator+=(const Operator& o) {
  if (!(group_ == o.group_)) throw std::invalid_argument("operators on different groups");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (!(group_ == o.group_)) throw std::invalid_argument("operators on different groups");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Operator& Operator::operator*=(std::complex<double> s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator*(std::complex<double> s, Operator a) { return a *= s; }

Operator matmul(const Operator& a, const Operator& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("operators on different groups");
  Operator c(a.group());
  const int n = a.dim();
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const std::complex<double> ark = a.at(r, k);
      if (ark == std::complex<double>(0.0)) continue;
      for (int col = 0; col < n; ++col) c.at(r, col) += ark * b.at(k, col);
    }
  }
  return c;
}

StateVector apply(const Operator& a, const StateVector& psi) {
  if (!(a.group() == psi.group)) throw std::invalid_argument("operator and state on different groups");
  StateVector out{a.group(), std::vector<std::complex<double>>(a.dim(), 0.0)};
  for (int r = 0; r < a.dim(); ++r) {
    std::complex<double> acc = 0.0;
    for (int c = 0; c < a.dim(); ++c) acc += a.at(r, c) * psi.amplitudes[c];
    out.amplitudes[r] = acc;
  }
  return out;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("operators on different groups");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

namespace {

// One cyclic Jacobi pass over the upper triangle of a symmetric matrix.
void jacobi_sweep(std::vector<double>& m, int n) {
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = m[static_cast<std::size_t>(p) * n + q];
      if (apq == 0.0) continue;
      const double app = m[static_cast<std::size_t>(p) * n + p];
      const double aqq = m[static_cast<std::size_t>(q) * n + q];
      const double tau = (aqq - app) / (2.0 * apq);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;
      for (int i = 0; i < n; ++i) {
        const double mip = m[static_cast<std::size_t>(i) * n + p];
        const double miq = m[static_cast<std::size_t>(i) * n + q];
        m[static_cast<std::size_t>(i) * n + p] = c * mip - s * miq;
        m[static_cast<std::size_t>(i) * n + q] = s * mip + c * miq;
      }
      for (int i = 0; i < n; ++i) {
        const double mpi = m[static_cast<std::size_t>(p) * n + i];
        const double mqi = m[static_cast<std::size_t>(q) * n + i];
        m[static_cast<std::size_t>(p) * n + i] = c * mpi - s * mqi;
        m[static_cast<std::size_t>(q) * n + i] = s * mpi + c * mqi;
      }
    }
  }
}

double off_diagonal_norm(const std::vector<double>& m, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) s += m[static_cast<std::size_t>(i) * n + j] * m[static_cast<std::size_t>(i) * n + j];
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Operator& a) {
  if (a.hermiticity_error() > 1e-8) {
    throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
  }
  const int n = a.dim();
  const int m = 2 * n;
  // Real symmetric embedding [[Re, -Im], [Im, Re]]; every eigenvalue of the
  // Hermitian input appears twice.
  std::vector<double> em(static_cast<std::size_t>(m) * m, 0.0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto v = a.at(r, c);
      em[static_cast<std::size_t>(r) * m + c] = v.real();
      em[static_cast<std::size_t>(r) * m + (n + c)] = -v.imag();
      em[static_cast<std::size_t>(n + r) * m + c] = v.imag();
      em[static_cast<std::size_t>(n + r) * m + (n + c)] = v.real();
    }
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(em, m) < 1e-12) break;
    jacobi_sweep(em, m);
  }
  std::vector<double> diag(m);
  for (int i = 0; i < m; ++i) diag[i] = em[static_cast<std::size_t>(i) * m + i];
  std::sort(diag.begin(), diag.end());
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  return eig;
}

StateCheck check_density(const Operator& rho, double psd_tol, double trace_tol,
                         double herm_tol) {
  StateCheck r;
  r.hermiticity_error = rho.hermiticity_error();
  r.trace_error = std::abs(rho.trace() - std::complex<double>(1.0));
  // Eigenvalue diagnostic on the Hermitian part, so garbage input still
  // yields a filled report instead of an exception.
  Operator herm = rho;
  herm += rho.dagger();
  herm *= 0.5;
  const auto eig = hermitian_eigenvalues(herm);
  r.min_eigenvalue = eig.empty() ? 0.0 : eig.front();
  r.is_state = r.hermiticity_error <= herm_tol && r.trace_error <= trace_tol &&
               r.min_eigenvalue >= -psd_tol;
  return r;
}

DensityState make_density(const Operator& rho) {
  const auto check = check_density(rho);
  if (!check.is_state) {
    throw std::invalid_argument("operator is not a density state");
  }
  return DensityState{rho};
}

}  // namespace kdfab
