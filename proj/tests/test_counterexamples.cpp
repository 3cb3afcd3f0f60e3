#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kdfab/counterexamples.hpp"
#include "support.hpp"

using namespace kdfab;

namespace {

const VerificationCheck& find_check(const VerificationReport& r, const std::string& label) {
  for (const auto& c : r.checks) {
    if (c.label == label) return c;
  }
  FAIL("missing check: ", label);
  static VerificationCheck dummy;
  return dummy;
}

}  // namespace

TEST_CASE("z6 constants") {
  const Z6Reference ref = z6_constants();

  CHECK(ref.qstar_entries[0][0] == 10);
  CHECK(ref.qstar.at(0, 0) == 10.0);

  // row sums of the witness table: two saturated rows, four on the plane
  const std::vector<double> expected_row_sums = {36, 36, 0, 0, 0, 0};
  for (int r = 0; r < 6; ++r) {
    double s = 0.0;
    for (int c = 0; c < 6; ++c) s += ref.qstar.at(r, c);
    CHECK(s == doctest::Approx(expected_row_sums[r]));
  }

  // algebraic restatement of the radical
  const double lhs = std::pow(2.0 * ref.alpha - 1.0 - std::sqrt(3.0), 2.0);
  CHECK(lhs == doctest::Approx(8.0 + 2.0 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(ref.alpha == doctest::Approx(3.0589594).epsilon(1e-6));

  double sum = 0.0, min_entry = 1e300;
  int zeros = 0;
  for (double v : ref.qalpha.values) {
    sum += v;
    min_entry = std::min(min_entry, v);
    if (v == 0.0) ++zeros;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(min_entry >= 0.0);
  CHECK(zeros == 4);
  CHECK(ref.qalpha.at(0, 1) == 0.0);
  CHECK(ref.qalpha.at(1, 4) == 0.0);
  CHECK(ref.qalpha.at(2, 0) == 0.0);
  CHECK(ref.qalpha.at(5, 5) == 0.0);

  CHECK(ref.layout == TableLayout::kRowGColChi);
  CHECK(std::find(ref.surviving_layouts.begin(), ref.surviving_layouts.end(),
                  TableLayout::kRowGColChi) != ref.surviving_layouts.end());
  // the verification structure is closed under transposition (Fourier
  // conjugation) and dual negation (complex conjugation), so all four
  // readings survive the lock
  CHECK(ref.surviving_layouts.size() == 4);
}

TEST_CASE("verify_z6 passes every check") {
  const VerificationReport r = verify_z6();
  CHECK(r.pass());
  CHECK(r.suite == "z6");

  CHECK(find_check(r, "rho_alpha_trace").pass);
  CHECK(find_check(r, "rho_alpha_psd").pass);
  CHECK(find_check(r, "rho_alpha_singular").pass);
  CHECK(find_check(r, "qalpha_nonneg").pass);
  CHECK(find_check(r, "qalpha_condsar").pass);
  CHECK(find_check(r, "rho_alpha_kd_positive").pass);
  CHECK(find_check(r, "qstar_qalpha_pairing").pass);
  CHECK(find_check(r, "pure_pairings_nonneg").pass);
  CHECK(find_check(r, "membership_infeasible").pass);
  CHECK(find_check(r, "layout_lock").pass);
}

TEST_CASE("z6 pairing value matches the closed form") {
  const Z6Reference ref = z6_constants();
  const double pairing = table_pairing(ref.qstar, to_complex(ref.qalpha)).real();
  const double closed_form = (3.0 - 3.0 * ref.alpha) / (3.0 * ref.alpha + 1.0);
  CHECK(pairing == doctest::Approx(closed_form).epsilon(1e-12));
  CHECK(pairing == doctest::Approx(-0.60695).epsilon(1e-4));
  CHECK(pairing < 0.0);
}

TEST_CASE("rho_alpha is a KD-positive state outside the pure hull") {
  const Z6Reference ref = z6_constants();
  const Operator rho_alpha = kd_lower_inverse(to_complex(ref.qalpha));

  const PositivityReport pos = check_kd_positive(rho_alpha);
  CHECK(pos.is_state);
  CHECK(pos.verdict);

  const HullMembership m = membership_conv_pure(rho_alpha);
  REQUIRE(!m.lp.feasible);
  CHECK(m.witness_min_pure_pairing >= -1e-10);
  CHECK(m.witness_state_pairing < -1e-8);
}

TEST_CASE("qalpha splits into periodic parts, but never nonnegatively") {
  // A sign-mixed decomposition along all four subgroups exists because
  // rho_alpha is self-adjoint; the membership LP certifies that no
  // nonnegative choice of parts can exist.
  const Z6Reference ref = z6_constants();
  const auto subs = all_subgroups(ref.group);
  const PeriodicDecomposition d = decompose_into_periodic(ref.qalpha, subs);
  RealTable rebuilt{ref.group, std::vector<double>(36, 0.0)};
  bool sign_mixed = false;
  for (const auto& part : d.parts) {
    CHECK(periodicity_defect(part.table, part.subgroup) == 0.0);
    for (double v : part.table.values) {
      if (v < -1e-9) sign_mixed = true;
    }
    for (int c = 0; c < 36; ++c) rebuilt.values[c] += part.table.values[c];
  }
  double resum = 0.0;
  for (int c = 0; c < 36; ++c) {
    resum = std::max(resum, std::abs(rebuilt.values[c] - ref.qalpha.values[c]));
  }
  CHECK(resum < 1e-9);
  CHECK(sign_mixed);  // were some choice nonnegative, the LP would be feasible
}

TEST_CASE("z2z2 constants") {
  const Z2Z2Reference ref = z2z2_constants();

  CHECK(ref.vstar.at(0, 3).real() == doctest::Approx(8.0 / 20.0));
  CHECK(ref.vstar.hermiticity_error() == 0.0);
  CHECK(std::abs(ref.vstar.trace() - std::complex<double>(1.0)) <= 1e-12);
  CHECK(std::abs(overlap(ref.vstar, ref.vstar) - std::complex<double>(1.05)) <= 1e-12);

  const StateCheck sc = check_density(ref.rhostar);
  CHECK(sc.is_state);
  const auto eig = hermitian_eigenvalues(ref.rhostar);
  CHECK(eig.front() > 1e-3);  // full rank

  // vstar is not positive and its KD table is real but sign-mixed
  const auto veig = hermitian_eigenvalues(ref.vstar);
  CHECK(veig.front() < -1e-3);
  const KDDistribution qv = kd_lower(ref.vstar);
  CHECK(qv.max_abs_imag() <= 1e-12);
  CHECK(qv.min_real() < -1e-3);
  double max_entry = -1e300;
  for (const auto& v : qv.values) max_entry = std::max(max_entry, v.real());
  CHECK(max_entry > 1e-3);
}

TEST_CASE("verify_z2z2 at the reference lambda") {
  const VerificationReport r = verify_z2z2(0.05);
  CHECK(r.pass());
  CHECK(find_check(r, "vstar_trace").pass);
  CHECK(find_check(r, "vstar_frobenius").pass);
  CHECK(find_check(r, "rhostar_full_rank_state").pass);
  CHECK(find_check(r, "rhostar_vstar_pairing").pass);
  CHECK(find_check(r, "pure_expectation_max").pass);
  CHECK(find_check(r, "trace_pairing@0.05").pass);
  CHECK(find_check(r, "psd@0.01").pass);
  CHECK(find_check(r, "psd@0.05").pass);
  CHECK(find_check(r, "kd_nonneg@0.05").pass);
  CHECK(find_check(r, "kd_violated@0.3").pass);
  CHECK(find_check(r, "membership_infeasible@0.05").pass);

  // Tr(rho_0.05 V*) = 0.45 + 0.6 * 0.05 = 0.48
  const Z2Z2Reference ref = z2z2_constants();
  Operator rho = ref.rhostar;
  rho *= 0.95;
  Operator v = ref.vstar;
  v *= 0.05;
  rho += v;
  CHECK(overlap(rho, ref.vstar).real() == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("verify_z2z2 at the endpoints") {
  const VerificationReport at_zero = verify_z2z2(0.0);
  CHECK(at_zero.pass());
  CHECK(find_check(at_zero, "membership@0").pass);  // rhostar itself lies in the hull

  const VerificationReport at_03 = verify_z2z2(0.3);
  CHECK(!at_03.pass());
  CHECK(!find_check(at_03, "kd_nonneg@0.3").pass);  // 0.3 > 5/19

  CHECK_THROWS_AS(verify_z2z2(1.5), std::invalid_argument);
  CHECK_THROWS_AS(verify_z2z2(-0.1), std::invalid_argument);
}

TEST_CASE("pure expectation bound is tight") {
  const Z2Z2Reference ref = z2z2_constants();
  double max_expectation = -1e300;
  for (const auto& s : pure_positive_states(ref.group)) {
    max_expectation =
        std::max(max_expectation, inner(s.vector, apply(ref.vstar, s.vector)).real());
  }
  CHECK(max_expectation == doctest::Approx(0.45).epsilon(1e-12));
}
