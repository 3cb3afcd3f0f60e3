#pragma once

#include <array>
#include <string>
#include <vector>

#include "kdfab/convex.hpp"

namespace kdfab {

struct VerificationCheck {
  std::string label;
  std::string relation;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;
  bool pass() const;
};

// Candidate readings of a printed table: as-is (row = group element, column =
// character under the +2*pi*i pairing), transposed, with the dual axis
// negated, or both. The loader discriminates once against the bundled data
// and pins the convention.
enum class TableLayout {
  kRowGColChi,
  kTransposed,
  kDualNegated,
  kTransposedDualNegated,
};
const char* table_layout_name(TableLayout layout);
RealTable transform_table(const RealTable& t, TableLayout layout);

// Z6 counterexample data: an integer bounding-plane witness table qstar that
// pairs nonnegatively with every pure KD-positive state, and a KD table
// qalpha whose preimage rho_alpha is a KD-positive state strictly outside
// conv of the pure KD-positive states.
struct Z6Reference {
  Group group;
  std::array<std::array<int, 6>, 6> qstar_entries;
  double alpha;                      // (1 + sqrt(3) + sqrt(8 + 2 sqrt(3))) / 2
  RealTable qstar;
  RealTable qalpha;                  // scaled by 1/(36 alpha + 12), sums to 1
  TableLayout layout;                // pinned convention (canonical reading)
  std::vector<TableLayout> surviving_layouts;
};

Z6Reference z6_constants();
VerificationReport verify_z6();

// Z2 x Z2 counterexample data: a symmetric witness observable vstar bounding
// the pure expectations by 0.45, and a full-rank state rhostar sitting on
// that bounding plane; mixing rhostar toward vstar stays KD-positive while
// leaving the convex hull of the pure KD-positive states.
struct Z2Z2Reference {
  Group group;
  Operator vstar;     // 1/20-scaled integer matrix; trace 1
  Operator rhostar;   // 1/2,1/8,... mixture of five rank-1 projectors
};

Z2Z2Reference z2z2_constants();
VerificationReport verify_z2z2(double lambda = 0.05);

}  // namespace kdfab
