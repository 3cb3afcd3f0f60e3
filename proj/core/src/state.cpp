#include "kdfab/state.hpp"

#include <cmath>
#include <stdexcept>

namespace kdfab {

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

StateVector basis_state(const Group& g, int index) {
  if (index < 0 || index >= g.order()) throw std::invalid_argument("basis index out of range");
  StateVector psi{g, std::vector<std::complex<double>>(g.order(), 0.0)};
  psi.amplitudes[index] = 1.0;
  return psi;
}

StateVector dual_basis_state(const Group& g, int chi) {
  if (chi < 0 || chi >= g.order()) throw std::invalid_argument("character index out of range");
  const double scale = 1.0 / std::sqrt(static_cast<double>(g.order()));
  StateVector psi{g, std::vector<std::complex<double>>(g.order())};
  for (int x = 0; x < g.order(); ++x) psi.amplitudes[x] = scale * g.character(chi, x);
  return psi;
}

StateVector subgroup_indicator_state(const Group& g, const Subgroup& h) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.order()));
  StateVector psi{g, std::vector<std::complex<double>>(g.order(), 0.0)};
  for (int e : h.indices) psi.amplitudes[e] = scale;
  return psi;
}

StateVector fourier(const StateVector& psi) {
  const Group& g = psi.group;
  const int n = g.order();
  if (static_cast<int>(psi.amplitudes.size()) != n) {
    throw std::invalid_argument("amplitude count does not match group order");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  StateVector out{g, std::vector<std::complex<double>>(n)};
  for (int chi = 0; chi < n; ++chi) {
    std::complex<double> acc = 0.0;
    for (int x = 0; x < n; ++x) acc += psi.amplitudes[x] * std::conj(g.character(chi, x));
    out.amplitudes[chi] = scale * acc;
  }
  return out;
}

StateVector inverse_fourier(const StateVector& eta) {
  const Group& g = eta.group;
  const int n = g.order();
  if (static_cast<int>(eta.amplitudes.size()) != n) {
    throw std::invalid_argument("amplitude count does not match group order");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  StateVector out{g, std::vector<std::complex<double>>(n)};
  for (int x = 0; x < n; ++x) {
    std::complex<double> acc = 0.0;
    for (int chi = 0; chi < n; ++chi) acc += g.character(chi, x) * eta.amplitudes[chi];
    out.amplitudes[x] = scale * acc;
  }
  return out;
}

StateVector weyl_apply(const StateVector& psi, const GroupElement& g0,
                       const GroupElement& chi0) {
  const Group& g = psi.group;
  const int n = g.order();
  if (static_cast<int>(psi.amplitudes.size()) != n) {
    throw std::invalid_argument("amplitude count does not match group order");
  }
  const int g0i = g.index(g0);
  const int chi0i = g.index(chi0);
  StateVector out{g, std::vector<std::complex<double>>(n)};
  for (int x = 0; x < n; ++x) {
    out.amplitudes[x] = g.character(chi0i, x) * psi.amplitudes[g.sub_index(x, g0i)];
  }
  return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (!(a.group == b.group)) throw std::invalid_argument("states live on different groups");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

}  // namespace kdfab
