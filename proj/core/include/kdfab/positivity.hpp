#pragma once

#include <vector>

#include "kdfab/kd.hpp"

namespace kdfab {

// Pure state with an everywhere-nonnegative KD table: the Weyl translate of
// the normalized indicator of a subgroup H, labeled by coset representatives
// (g0, chi0) in G/H x dual(G)/H_perp.
struct LabeledPureState {
  Subgroup subgroup;      // H
  Subgroup dual_subgroup; // H_perp, on the dual index space
  GroupElement g0;
  GroupElement chi0;
  StateVector vector;
};

// All pure KD-positive states of G, one per (H, g0, chi0); exactly
// |G| * (number of subgroups) entries, with distinct projectors. Includes
// every a_g (H trivial) and every b_chi (H = G).
std::vector<LabeledPureState> pure_positive_states(const Group& g);

// eta(g,chi) = (1/|G|) 1_H(g-g0) 1_{H_perp}(chi-chi0): the KD table of the
// labeled pure state; values are 0 or 1/|G| and sum to 1.
KDDistribution eta(const Group& g, const Subgroup& h, const GroupElement& g0,
                   const GroupElement& chi0);
KDDistribution eta(const LabeledPureState& s);

struct PositivityReport {
  bool is_state = false;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
  double min_kd_value = 0.0;
  double max_imag_kd = 0.0;
  bool verdict = false;
};

// KD positivity of a (claimed) density matrix: verdict is true iff the input
// is a state and its KD table is entrywise >= -eps with imaginary parts
// below eps. Non-states yield verdict false with diagnostics filled in.
PositivityReport check_kd_positive(const Operator& rho, double eps = 1e-9);

// Max over (g,g') of |sum_chi chi(g-g') (Q(g,chi) - Q(g',chi))|. Zero exactly
// when the preimage operator of the real table Q is self-adjoint. Rejects
// tables with imaginary parts above 1e-10.
double condsar_residual(const KDDistribution& q);
double condsar_residual(const RealTable& q);

// Dimension of the span of the KD-real observables: computed as the real
// rank of the eta family and cross-checked against the dimension of the
// solution space of the self-adjointness condition; throws on mismatch.
int kdr_space_dimension(const Group& g);

}  // namespace kdfab
