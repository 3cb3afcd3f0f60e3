#pragma once

#include <vector>

#include "kdfab/positivity.hpp"
#include "kdfab/simplex.hpp"

namespace kdfab {

struct PeriodicPart {
  Subgroup subgroup;  // H; the table is H x H_perp periodic
  RealTable table;
};

struct PeriodicDecomposition {
  std::vector<PeriodicPart> parts;
};

// Average over H x H_perp translation orbits. Output is bitwise periodic
// (orbit values are computed once and broadcast), linear, idempotent, and
// contractive in max-norm.
RealTable periodic_average(const RealTable& q, const Subgroup& h);

// Max-norm distance from q to its H x H_perp periodic average.
double periodicity_defect(const RealTable& q, const Subgroup& h);

// Splits a table satisfying the self-adjointness condition along the given
// subgroup family. Tables lying in a single periodic space decompose
// trivially; otherwise the orbit-value coefficients are the ridge-regularized
// least-squares solution, so runs are reproducible. Parts may be sign-mixed.
// Throws if the family cannot represent q (residual above 1e-9).
PeriodicDecomposition decompose_into_periodic(const RealTable& q,
                                              const std::vector<Subgroup>& family);

// Redistributes a (possibly sign-mixed) decomposition of a nonnegative table
// along a subgroup chain H_0 c H_1 c ... c H_N into nonnegative periodic
// parts: each level keeps f_i minus its minimum over H_{i+1} translates and
// folds the rest into the next level. Requires a chain; requires f >= -1e-10.
PeriodicDecomposition greedy_nonnegative_repair(const RealTable& f,
                                                const PeriodicDecomposition& parts);

// Hull-membership outcome for conv of the pure KD-positive states. When
// feasible, `weights` align with the pure-state list and reconstruct the
// state; when infeasible, `witness` is the Farkas certificate reshaped into
// bounding-plane form: pairing >= 0 against every eta, < 0 against Q[rho].
struct HullMembership {
  LPOutcome lp;
  std::vector<double> weights;
  RealTable witness;
  double witness_min_pure_pairing = 0.0;
  double witness_state_pairing = 0.0;
};

HullMembership membership_conv_pure(const Operator& rho);
HullMembership membership_conv_pure(const Operator& rho,
                                    const std::vector<LabeledPureState>& states);

// Feasible weights grouped by subgroup give nonnegative periodic parts that
// re-sum to the state's KD table; membership_conv_pure asserts this on every
// feasible outcome and this helper exposes the grouping.
PeriodicDecomposition weights_by_subgroup(const Group& g,
                                          const std::vector<LabeledPureState>& states,
                                          const std::vector<double>& weights);

}  // namespace kdfab
