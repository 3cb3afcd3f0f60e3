#include "kdfab/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kdfab {

bool VerificationReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const char* table_layout_name(TableLayout layout) {
  switch (layout) {
    case TableLayout::kRowGColChi: return "row-g-col-chi";
    case TableLayout::kTransposed: return "transposed";
    case TableLayout::kDualNegated: return "dual-negated";
    case TableLayout::kTransposedDualNegated: return "transposed-dual-negated";
  }
  return "unknown";
}

RealTable transform_table(const RealTable& t, TableLayout layout) {
  const Group& g = t.group;
  const int n = g.order();
  RealTable out{g, std::vector<double>(t.values.size())};
  for (int x = 0; x < n; ++x) {
    for (int chi = 0; chi < n; ++chi) {
      double v = 0.0;
      switch (layout) {
        case TableLayout::kRowGColChi: v = t.at(x, chi); break;
        case TableLayout::kTransposed: v = t.at(chi, x); break;
        case TableLayout::kDualNegated: v = t.at(x, g.neg_index(chi)); break;
        case TableLayout::kTransposedDualNegated: v = t.at(g.neg_index(chi), x); break;
      }
      out.at(x, chi) = v;
    }
  }
  return out;
}

namespace {

constexpr std::array<std::array<int, 6>, 6> kQStar = {{
    {10, 10, 1, 10, -2, 7},
    {10, 10, 7, -2, 10, 1},
    {7, 1, -2, 1, -5, -2},
    {-2, 10, -5, -2, -2, 1},
    {10, -2, 1, -2, -2, -5},
    {1, 7, -2, -5, 1, -2},
}};

// qalpha entries before scaling, as (constant, alpha coefficient) pairs.
struct AlphaEntry {
  int p;
  int q;
};
constexpr std::array<std::array<AlphaEntry, 6>, 6> kQAlpha = {{
    {{{1, 0}, {0, 0}, {1, 2}, {1, 0}, {0, 1}, {1, 0}}},
    {{{1, 0}, {0, 1}, {1, 0}, {1, 2}, {0, 0}, {1, 0}}},
    {{{0, 0}, {-1, 1}, {0, 2}, {0, 1}, {-1, 1}, {0, 1}}},
    {{{1, 2}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {1, 0}}},
    {{{1, 0}, {0, 2}, {1, 2}, {1, 2}, {0, 1}, {1, 2}}},
    {{{0, 1}, {-1, 1}, {0, 1}, {0, 2}, {-1, 1}, {0, 0}}},
}};

constexpr std::array<std::array<int, 4>, 4> kVStar = {{
    {1, -4, -4, 8},
    {-4, 9, 0, 4},
    {-4, 0, 9, 4},
    {8, 4, 4, 1},
}};

VerificationCheck make_check(std::string label, std::string relation, double computed,
                             double tolerance, bool pass) {
  return VerificationCheck{std::move(label), std::move(relation), computed, tolerance, pass};
}

std::string format_lambda(double lambda) {
  std::ostringstream os;
  os << lambda;
  return os.str();
}

// The full layout discrimination for the Z6 data: a reading survives when
// every claim it touches holds at once.
bool z6_layout_survives(const RealTable& qstar, const RealTable& qalpha, double alpha,
                        const std::vector<LabeledPureState>& pure) {
  const KDDistribution qa = to_complex(qalpha);
  const Operator rho = kd_lower_inverse(qa);
  if (std::abs(rho.trace() - std::complex<double>(1.0)) > 1e-10) return false;
  if (rho.hermiticity_error() > 1e-8) return false;
  const auto eig = hermitian_eigenvalues(rho);
  if (eig.front() < -1e-9) return false;
  if (condsar_residual(qa) > 1e-10) return false;
  for (const auto& s : pure) {
    const KDDistribution q = kd_lower(Operator::projector(s.vector));
    if (table_pairing(qstar, q).real() < -1e-10) return false;
  }
  const double pairing = table_pairing(qstar, qa).real();
  const double claimed = (3.0 - 3.0 * alpha) / (3.0 * alpha + 1.0);
  return std::abs(pairing - claimed) <= 1e-9;
}

}  // namespace

Z6Reference z6_constants() {
  const Group g = make_group({6});
  const double alpha = (1.0 + std::sqrt(3.0) + std::sqrt(8.0 + 2.0 * std::sqrt(3.0))) / 2.0;
  const double scale = 1.0 / (36.0 * alpha + 12.0);

  RealTable qstar{g, std::vector<double>(36)};
  RealTable qalpha{g, std::vector<double>(36)};
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      qstar.at(r, c) = kQStar[r][c];
      qalpha.at(r, c) = (kQAlpha[r][c].p + kQAlpha[r][c].q * alpha) * scale;
    }
  }

  const auto pure = pure_positive_states(g);
  std::vector<TableLayout> surviving;
  for (TableLayout layout : {TableLayout::kRowGColChi, TableLayout::kTransposed,
                             TableLayout::kDualNegated, TableLayout::kTransposedDualNegated}) {
    if (z6_layout_survives(transform_table(qstar, layout),
                           transform_table(qalpha, layout), alpha, pure)) {
      surviving.push_back(layout);
    }
  }
  if (std::find(surviving.begin(), surviving.end(), TableLayout::kRowGColChi) ==
      surviving.end()) {
    throw std::runtime_error("z6_constants: canonical table layout fails the data checks");
  }
  return Z6Reference{g, kQStar, alpha, std::move(qstar), std::move(qalpha),
                     TableLayout::kRowGColChi, std::move(surviving)};
}

VerificationReport verify_z6() {
  const Z6Reference ref = z6_constants();
  const Group& g = ref.group;
  VerificationReport report{"z6", {}};

  const KDDistribution qalpha = to_complex(ref.qalpha);
  const Operator rho_alpha = kd_lower_inverse(qalpha);

  const double trace_err = std::abs(rho_alpha.trace() - std::complex<double>(1.0));
  report.checks.push_back(make_check("rho_alpha_trace", "Tr(rho_alpha) = 1", trace_err,
                                     1e-10, trace_err <= 1e-10));

  const auto eig = hermitian_eigenvalues(rho_alpha);
  report.checks.push_back(make_check("rho_alpha_psd", "min eig(rho_alpha) >= -1e-9",
                                     eig.front(), 1e-9, eig.front() >= -1e-9));
  report.checks.push_back(make_check("rho_alpha_singular", "min eig(rho_alpha) ~ 0",
                                     std::abs(eig.front()), 1e-6,
                                     std::abs(eig.front()) <= 1e-6));

  double min_entry = std::numeric_limits<double>::infinity();
  for (double v : ref.qalpha.values) min_entry = std::min(min_entry, v);
  report.checks.push_back(make_check("qalpha_nonneg", "Q_alpha entrywise >= 0", min_entry,
                                     0.0, min_entry >= 0.0));

  const double condsar = condsar_residual(qalpha);
  report.checks.push_back(make_check("qalpha_condsar", "self-adjointness residual < 1e-10",
                                     condsar, 1e-10, condsar <= 1e-10));

  const PositivityReport pos = check_kd_positive(rho_alpha);
  report.checks.push_back(make_check("rho_alpha_kd_positive", "rho_alpha is KD-positive",
                                     pos.min_kd_value, 1e-9, pos.verdict));

  const double pairing = table_pairing(ref.qstar, qalpha).real();
  const double claimed = (3.0 - 3.0 * ref.alpha) / (3.0 * ref.alpha + 1.0);
  report.checks.push_back(make_check("qstar_qalpha_pairing",
                                     "<Q*, Q_alpha> = (3-3a)/(3a+1)",
                                     std::abs(pairing - claimed), 1e-9,
                                     std::abs(pairing - claimed) <= 1e-9));

  const auto pure = pure_positive_states(g);
  double min_pure = std::numeric_limits<double>::infinity();
  for (const auto& s : pure) {
    const KDDistribution q = kd_lower(Operator::projector(s.vector));
    min_pure = std::min(min_pure, table_pairing(ref.qstar, q).real());
  }
  report.checks.push_back(make_check("pure_pairings_nonneg",
                                     "<Q*, Q[psi]> >= 0 for all 24 pure states", min_pure,
                                     1e-10, min_pure >= -1e-10));

  const HullMembership membership = membership_conv_pure(rho_alpha, pure);
  report.checks.push_back(make_check("membership_infeasible",
                                     "rho_alpha outside conv(pure KD-positive)",
                                     membership.lp.feasible ? 0.0 : membership.witness_state_pairing,
                                     1e-8, !membership.lp.feasible));

  report.checks.push_back(make_check("layout_lock",
                                     "canonical table reading passes the data checks",
                                     static_cast<double>(ref.surviving_layouts.size()), 0.0,
                                     ref.layout == TableLayout::kRowGColChi));
  return report;
}

Z2Z2Reference z2z2_constants() {
  const Group g = make_group({2, 2});
  Operator vstar(g);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) vstar.at(r, c) = kVStar[r][c] / 20.0;
  }

  // rhostar = 1/2 |a01><a01| + 1/8 each of four superposition projectors.
  const auto ket = [&](int i) { return basis_state(g, i); };
  const auto mix = [&](const StateVector& u, const StateVector& v, double su, double sv) {
    StateVector w{g, std::vector<std::complex<double>>(4)};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 4; ++i) {
      w.amplitudes[i] = inv_sqrt2 * (su * u.amplitudes[i] + sv * v.amplitudes[i]);
    }
    return w;
  };
  Operator rhostar(g);
  rhostar += 0.5 * Operator::projector(ket(1));
  rhostar += 0.125 * Operator::projector(mix(ket(0), ket(1), 1.0, -1.0));
  rhostar += 0.125 * Operator::projector(mix(ket(2), ket(3), 1.0, 1.0));
  rhostar += 0.125 * Operator::projector(mix(ket(0), ket(2), 1.0, -1.0));
  rhostar += 0.125 * Operator::projector(mix(ket(1), ket(3), 1.0, 1.0));

  return Z2Z2Reference{g, std::move(vstar), std::move(rhostar)};
}

VerificationReport verify_z2z2(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("verify_z2z2: lambda must lie in [0,1]");
  }
  const Z2Z2Reference ref = z2z2_constants();
  const Group& g = ref.group;
  VerificationReport report{"z2z2", {}};

  const double vstar_trace_err = std::abs(ref.vstar.trace() - std::complex<double>(1.0));
  report.checks.push_back(make_check("vstar_trace", "Tr(V*) = 1", vstar_trace_err, 1e-12,
                                     vstar_trace_err <= 1e-12));

  const std::complex<double> frob = overlap(ref.vstar, ref.vstar);
  report.checks.push_back(make_check("vstar_frobenius", "Tr(V*^dag V*) = 1.05",
                                     std::abs(frob - std::complex<double>(1.05)), 1e-12,
                                     std::abs(frob - std::complex<double>(1.05)) <= 1e-12));

  const StateCheck rhostar_check = check_density(ref.rhostar);
  const auto rhostar_eig = hermitian_eigenvalues(ref.rhostar);
  report.checks.push_back(make_check("rhostar_full_rank_state",
                                     "rhostar is a state with min eig > 0",
                                     rhostar_eig.front(), 1e-9,
                                     rhostar_check.is_state && rhostar_eig.front() > 1e-9));

  const double rhostar_pairing = overlap(ref.rhostar, ref.vstar).real();
  report.checks.push_back(make_check("rhostar_vstar_pairing", "Tr(rhostar V*) = 0.45",
                                     std::abs(rhostar_pairing - 0.45), 1e-10,
                                     std::abs(rhostar_pairing - 0.45) <= 1e-10));

  const auto pure = pure_positive_states(g);
  double max_expectation = -std::numeric_limits<double>::infinity();
  for (const auto& s : pure) {
    max_expectation = std::max(max_expectation,
                               inner(s.vector, apply(ref.vstar, s.vector)).real());
  }
  report.checks.push_back(make_check("pure_expectation_max",
                                     "<psi|V*|psi> <= 0.45 for all 20 pure states",
                                     max_expectation, 1e-10,
                                     max_expectation <= 0.45 + 1e-10));

  const auto rho_at = [&](double l) {
    Operator rho = ref.rhostar;
    rho *= (1.0 - l);
    Operator v = ref.vstar;
    v *= l;
    rho += v;
    return rho;
  };

  const double expected_pairing = 0.45 + 0.6 * lambda;
  const double pairing = overlap(rho_at(lambda), ref.vstar).real();
  report.checks.push_back(make_check("trace_pairing@" + format_lambda(lambda),
                                     "Tr(rho_lambda V*) = 0.45 + 0.6 lambda",
                                     std::abs(pairing - expected_pairing), 1e-10,
                                     std::abs(pairing - expected_pairing) <= 1e-10));

  // The 0.05 bound on positivity is sufficient, not sharp (the smallest
  // eigenvalue stays positive until lambda ~ 0.0766), so positivity is
  // checked on the quoted range only.
  std::vector<double> psd_grid = {0.01, 0.05};
  if (std::find(psd_grid.begin(), psd_grid.end(), lambda) == psd_grid.end()) {
    psd_grid.push_back(lambda);
  }
  for (double l : psd_grid) {
    const auto eig = hermitian_eigenvalues(rho_at(l));
    report.checks.push_back(make_check("psd@" + format_lambda(l),
                                       "min eig(rho_lambda) >= -1e-9", eig.front(), 1e-9,
                                       eig.front() >= -1e-9));
  }

  std::vector<double> kd_grid = {0.05, 5.0 / 19.0};
  if (std::find(kd_grid.begin(), kd_grid.end(), lambda) == kd_grid.end()) {
    kd_grid.push_back(lambda);
  }
  for (double l : kd_grid) {
    const KDDistribution q = kd_lower(rho_at(l));
    const bool ok = q.min_real() >= -1e-10 && q.max_abs_imag() <= 1e-10;
    report.checks.push_back(make_check("kd_nonneg@" + format_lambda(l),
                                       "Q[rho_lambda] entrywise >= 0", q.min_real(), 1e-10,
                                       ok));
  }
  const KDDistribution q_out = kd_lower(rho_at(0.30));
  report.checks.push_back(make_check("kd_violated@0.3",
                                     "Q[rho_lambda] turns negative past 5/19",
                                     q_out.min_real(), 1e-10, q_out.min_real() < -1e-10));

  const HullMembership m05 = membership_conv_pure(rho_at(0.05), pure);
  report.checks.push_back(make_check("membership_infeasible@0.05",
                                     "rho_0.05 outside conv(pure KD-positive)",
                                     m05.lp.feasible ? 0.0 : m05.witness_state_pairing, 1e-8,
                                     !m05.lp.feasible));
  if (lambda != 0.05) {
    const HullMembership ml = membership_conv_pure(rho_at(lambda), pure);
    const bool expect_feasible = lambda <= 1e-12;
    report.checks.push_back(make_check(
        "membership@" + format_lambda(lambda),
        expect_feasible ? "rho_0 lies in conv(pure KD-positive)"
                        : "rho_lambda outside conv(pure KD-positive)",
        ml.lp.feasible ? ml.lp.primal_residual : ml.witness_state_pairing, 1e-8,
        ml.lp.feasible == expect_feasible));
  }
  return report;
}

}  // namespace kdfab
