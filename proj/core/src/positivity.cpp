#include "kdfab/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dense.hpp"

namespace kdfab {

std::vector<LabeledPureState> pure_positive_states(const Group& g) {
  const auto subgroups = all_subgroups(g);
  std::vector<LabeledPureState> states;
  states.reserve(static_cast<std::size_t>(g.order()) * subgroups.size());
  for (const auto& h : subgroups) {
    const Subgroup hp = annihilator(g, h);
    const StateVector psi_h = subgroup_indicator_state(g, h);
    for (const auto& g0 : coset_representatives(g, h)) {
      for (const auto& chi0 : coset_representatives(g, hp)) {
        states.push_back(LabeledPureState{h, hp, g0, chi0,
                                          weyl_apply(psi_h, g0, chi0)});
      }
    }
  }
  if (states.size() != static_cast<std::size_t>(g.order()) * subgroups.size()) {
    throw std::runtime_error("pure_positive_states: unexpected state count");
  }
  // Distinct (H, g0, chi0) labels must give distinct projectors. The KD map
  // is injective, so it suffices that the eta support rectangles differ.
  std::vector<std::vector<int>> signatures;
  signatures.reserve(states.size());
  for (const auto& s : states) {
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(s.subgroup.order()) * s.dual_subgroup.order());
    const int g0i = g.index(s.g0);
    const int chi0i = g.index(s.chi0);
    for (int r : s.subgroup.indices) {
      for (int c : s.dual_subgroup.indices) {
        sig.push_back(g.add_index(r, g0i) * g.order() + g.add_index(c, chi0i));
      }
    }
    std::sort(sig.begin(), sig.end());
    signatures.push_back(std::move(sig));
  }
  auto sorted = signatures;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::runtime_error("pure_positive_states: label collision detected");
  }
  return states;
}

KDDistribution eta(const Group& g, const Subgroup& h, const GroupElement& g0,
                   const GroupElement& chi0) {
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  const Subgroup hp = annihilator(g, h);
  const int n = g.order();
  const int g0i = g.index(g0);
  const int chi0i = g.index(chi0);
  KDDistribution q{g, std::vector<std::complex<double>>(static_cast<std::size_t>(n) * n, 0.0)};
  const double v = 1.0 / n;
  for (int x = 0; x < n; ++x) {
    if (!h.contains_index(g.sub_index(x, g0i))) continue;
    for (int chi = 0; chi < n; ++chi) {
      if (hp.contains_index(g.sub_index(chi, chi0i))) q.at(x, chi) = v;
    }
  }
  return q;
}

KDDistribution eta(const LabeledPureState& s) {
  const Group& g = s.subgroup.parent;
  const int n = g.order();
  const int g0i = g.index(s.g0);
  const int chi0i = g.index(s.chi0);
  KDDistribution q{g, std::vector<std::complex<double>>(static_cast<std::size_t>(n) * n, 0.0)};
  const double v = 1.0 / n;
  for (int x = 0; x < n; ++x) {
    if (!s.subgroup.contains_index(g.sub_index(x, g0i))) continue;
    for (int chi = 0; chi < n; ++chi) {
      if (s.dual_subgroup.contains_index(g.sub_index(chi, chi0i))) q.at(x, chi) = v;
    }
  }
  return q;
}

PositivityReport check_kd_positive(const Operator& rho, double eps) {
  PositivityReport r;
  const StateCheck sc = check_density(rho);
  r.is_state = sc.is_state;
  r.min_eigenvalue = sc.min_eigenvalue;
  r.trace_error = sc.trace_error;
  const KDDistribution q = kd_lower(rho);
  r.min_kd_value = q.min_real();
  r.max_imag_kd = q.max_abs_imag();
  r.verdict = r.is_state && r.min_kd_value >= -eps && r.max_imag_kd <= eps;
  return r;
}

namespace {

double condsar_residual_real(const Group& g, const std::vector<double>& q) {
  const int n = g.order();
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const int d = g.sub_index(a, b);
      std::complex<double> acc = 0.0;
      for (int chi = 0; chi < n; ++chi) {
        acc += g.character(chi, d) *
               (q[static_cast<std::size_t>(a) * n + chi] - q[static_cast<std::size_t>(b) * n + chi]);
      }
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

}  // namespace

double condsar_residual(const KDDistribution& q) {
  if (q.max_abs_imag() > 1e-10) {
    throw std::invalid_argument("condsar_residual: table is not real");
  }
  std::vector<double> re(q.values.size());
  for (std::size_t i = 0; i < q.values.size(); ++i) re[i] = q.values[i].real();
  return condsar_residual_real(q.group, re);
}

double condsar_residual(const RealTable& q) {
  return condsar_residual_real(q.group, q.values);
}

int kdr_space_dimension(const Group& g) {
  const int n = g.order();
  const int cells = n * n;

  // Route 1: real rank of the eta family.
  const auto states = pure_positive_states(g);
  std::vector<double> eta_rows;
  eta_rows.reserve(states.size() * static_cast<std::size_t>(cells));
  for (const auto& s : states) {
    const KDDistribution q = eta(s);
    for (const auto& v : q.values) eta_rows.push_back(v.real());
  }
  const int rank_eta = detail::matrix_rank(std::move(eta_rows),
                                           static_cast<int>(states.size()), cells, 1e-9);

  // Route 2: dimension of the real solution space of the self-adjointness
  // condition, one complex (two real) equations per ordered pair (g,g').
  std::vector<double> rows;
  rows.reserve(static_cast<std::size_t>(2 * n * (n - 1)) * cells);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const int d = g.sub_index(a, b);
      std::vector<double> re_row(cells, 0.0), im_row(cells, 0.0);
      for (int chi = 0; chi < n; ++chi) {
        const auto c = g.character(chi, d);
        re_row[static_cast<std::size_t>(a) * n + chi] += c.real();
        re_row[static_cast<std::size_t>(b) * n + chi] -= c.real();
        im_row[static_cast<std::size_t>(a) * n + chi] += c.imag();
        im_row[static_cast<std::size_t>(b) * n + chi] -= c.imag();
      }
      rows.insert(rows.end(), re_row.begin(), re_row.end());
      rows.insert(rows.end(), im_row.begin(), im_row.end());
    }
  }
  const int constraint_rows = 2 * n * (n - 1);
  const int rank_constraints =
      constraint_rows == 0 ? 0
                           : detail::matrix_rank(std::move(rows), constraint_rows, cells, 1e-9);
  const int nullity = cells - rank_constraints;

  if (rank_eta != nullity) {
    throw std::runtime_error("kdr_space_dimension: eta rank " + std::to_string(rank_eta) +
                             " != condition nullity " + std::to_string(nullity));
  }
  return rank_eta;
}

}  // namespace kdfab
