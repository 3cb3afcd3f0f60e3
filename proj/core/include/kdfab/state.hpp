#pragma once

#include <complex>
#include <vector>

#include "kdfab/group.hpp"

namespace kdfab {

// Vector in L2(G); amplitudes follow the canonical element order. Fourier
// images live on the dual index space of the same Group value.
struct StateVector {
  Group group;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

StateVector basis_state(const Group& g, int index);      // a_g, delta at g
StateVector dual_basis_state(const Group& g, int chi);   // b_chi(x) = chi(x)/sqrt(|G|)
// psi_H = |H|^{-1/2} 1_H, the normalized indicator of a subgroup.
StateVector subgroup_indicator_state(const Group& g, const Subgroup& h);

// psi_hat(chi) = |G|^{-1/2} sum_g psi(g) conj(chi(g)). Norm-preserving.
StateVector fourier(const StateVector& psi);
// eta_check(g) = |G|^{-1/2} sum_chi chi(g) eta(chi). Inverse of fourier.
StateVector inverse_fourier(const StateVector& eta);

// (M_chi0 T_g0 psi)(x) = chi0(x) psi(x - g0). Heisenberg action with the
// scalar phase fixed to 1; norm-preserving.
StateVector weyl_apply(const StateVector& psi, const GroupElement& g0,
                       const GroupElement& chi0);

std::complex<double> inner(const StateVector& a, const StateVector& b);

}  // namespace kdfab
