#include "kdfab/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dense.hpp"

namespace kdfab {

namespace {

// Orbit structure of the H x H_perp translation action on G x dual(G):
// orbit id per cell, plus one representative cell per orbit. Orbits are the
// products (coset of H) x (coset of H_perp), |G| of them.
struct OrbitIndex {
  std::vector<int> orbit_of_cell;          // size |G|^2
  std::vector<std::vector<int>> cells_of;  // orbit -> cell list
};

OrbitIndex orbit_index(const Group& g, const Subgroup& h, const Subgroup& hp) {
  const int n = g.order();
  OrbitIndex oi;
  oi.orbit_of_cell.assign(static_cast<std::size_t>(n) * n, -1);
  const auto row_reps = coset_representative_indices(g, h);
  const auto col_reps = coset_representative_indices(g, hp);
  std::vector<int> row_rep_of(n), col_rep_of(n);
  for (std::size_t i = 0; i < row_reps.size(); ++i) {
    for (int s : h.indices) row_rep_of[g.add_index(row_reps[i], s)] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < col_reps.size(); ++i) {
    for (int s : hp.indices) col_rep_of[g.add_index(col_reps[i], s)] = static_cast<int>(i);
  }
  const int cols = static_cast<int>(col_reps.size());
  oi.cells_of.assign(row_reps.size() * col_reps.size(), {});
  for (int x = 0; x < n; ++x) {
    for (int chi = 0; chi < n; ++chi) {
      const int orbit = row_rep_of[x] * cols + col_rep_of[chi];
      oi.orbit_of_cell[static_cast<std::size_t>(x) * n + chi] = orbit;
      oi.cells_of[orbit].push_back(x * n + chi);
    }
  }
  return oi;
}

}  // namespace

RealTable periodic_average(const RealTable& q, const Subgroup& h) {
  const Group& g = q.group;
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  const Subgroup hp = annihilator(g, h);
  const OrbitIndex oi = orbit_index(g, h, hp);
  RealTable out{g, std::vector<double>(q.values.size(), 0.0)};
  for (const auto& cells : oi.cells_of) {
    // Broadcast one value per orbit so periodicity holds bitwise; skip the
    // arithmetic entirely when the orbit is already constant.
    bool constant = true;
    for (int c : cells) {
      if (q.values[c] != q.values[cells.front()]) {
        constant = false;
        break;
      }
    }
    double v;
    if (constant) {
      v = q.values[cells.front()];
    } else {
      double s = 0.0;
      for (int c : cells) s += q.values[c];
      v = s / static_cast<double>(cells.size());
    }
    for (int c : cells) out.values[c] = v;
  }
  return out;
}

double periodicity_defect(const RealTable& q, const Subgroup& h) {
  const RealTable avg = periodic_average(q, h);
  double m = 0.0;
  for (std::size_t i = 0; i < q.values.size(); ++i) {
    m = std::max(m, std::abs(q.values[i] - avg.values[i]));
  }
  return m;
}

PeriodicDecomposition decompose_into_periodic(const RealTable& q,
                                              const std::vector<Subgroup>& family) {
  const Group& g = q.group;
  const int n = g.order();
  const int cells = n * n;
  if (family.empty()) throw std::invalid_argument("decompose_into_periodic: empty family");
  if (static_cast<int>(q.values.size()) != cells) {
    throw std::invalid_argument("decompose_into_periodic: table size mismatch");
  }

  // Exact members of a single periodic space decompose trivially; prefer the
  // largest matching subgroup.
  int exact = -1;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (periodicity_defect(q, family[i]) <= 1e-12) {
      if (exact < 0 || family[i].order() > family[exact].order()) exact = static_cast<int>(i);
    }
  }
  PeriodicDecomposition d;
  if (exact >= 0) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      RealTable part{g, std::vector<double>(cells, 0.0)};
      if (static_cast<int>(i) == exact) part = periodic_average(q, family[i]);
      d.parts.push_back(PeriodicPart{family[i], std::move(part)});
    }
    return d;
  }

  // Stack the orbit-indicator columns of every family member and solve the
  // ridge-regularized normal equations for the orbit values.
  std::vector<OrbitIndex> orbits;
  std::vector<int> offset;
  int unknowns = 0;
  for (const auto& h : family) {
    const Subgroup hp = annihilator(g, h);
    orbits.push_back(orbit_index(g, h, hp));
    offset.push_back(unknowns);
    unknowns += static_cast<int>(orbits.back().cells_of.size());
  }

  // Normal matrix entries are orbit-intersection counts, accumulated per cell.
  std::vector<double> ata(static_cast<std::size_t>(unknowns) * unknowns, 0.0);
  std::vector<double> atb(unknowns, 0.0);
  std::vector<int> cell_cols(family.size());
  for (int cell = 0; cell < cells; ++cell) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      cell_cols[i] = offset[i] + orbits[i].orbit_of_cell[cell];
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      atb[cell_cols[i]] += q.values[cell];
      for (std::size_t j = 0; j < family.size(); ++j) {
        ata[static_cast<std::size_t>(cell_cols[i]) * unknowns + cell_cols[j]] += 1.0;
      }
    }
  }
  for (int i = 0; i < unknowns; ++i) ata[static_cast<std::size_t>(i) * unknowns + i] += 1e-12;
  const std::vector<double> x = detail::solve_spd(std::move(ata), std::move(atb), unknowns);

  double residual = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    RealTable part{g, std::vector<double>(cells, 0.0)};
    for (std::size_t orbit = 0; orbit < orbits[i].cells_of.size(); ++orbit) {
      const double v = x[offset[i] + orbit];
      for (int c : orbits[i].cells_of[orbit]) part.values[c] = v;
    }
    d.parts.push_back(PeriodicPart{family[i], std::move(part)});
  }
  for (int cell = 0; cell < cells; ++cell) {
    double s = 0.0;
    for (const auto& part : d.parts) s += part.table.values[cell];
    residual = std::max(residual, std::abs(s - q.values[cell]));
  }
  if (residual > 1e-9) {
    throw std::runtime_error(
        "decompose_into_periodic: table is not representable by the family (residual " +
        std::to_string(residual) + ")");
  }
  return d;
}

PeriodicDecomposition greedy_nonnegative_repair(const RealTable& f,
                                                const PeriodicDecomposition& parts) {
  const Group& g = f.group;
  const int n = g.order();
  const int cells = n * n;
  if (parts.parts.empty()) throw std::invalid_argument("greedy_nonnegative_repair: no parts");
  for (double v : f.values) {
    if (v < -1e-10) {
      throw std::invalid_argument("greedy_nonnegative_repair: table has negative entries");
    }
  }
  std::vector<PeriodicPart> chain(parts.parts.begin(), parts.parts.end());
  std::sort(chain.begin(), chain.end(), [](const PeriodicPart& a, const PeriodicPart& b) {
    return a.subgroup.order() < b.subgroup.order();
  });
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    for (int e : chain[i].subgroup.indices) {
      if (!chain[i + 1].subgroup.contains_index(e)) {
        throw std::invalid_argument("greedy_nonnegative_repair: subgroups do not form a chain");
      }
    }
  }
  double sum_defect = 0.0;
  for (int cell = 0; cell < cells; ++cell) {
    double s = 0.0;
    for (const auto& part : chain) s += part.table.values[cell];
    sum_defect = std::max(sum_defect, std::abs(s - f.values[cell]));
  }
  if (sum_defect > 1e-9) {
    throw std::invalid_argument("greedy_nonnegative_repair: parts do not sum to the table");
  }
  for (const auto& part : chain) {
    if (periodicity_defect(part.table, part.subgroup) > 1e-9) {
      throw std::invalid_argument("greedy_nonnegative_repair: part is not periodic");
    }
  }

  // Level i keeps f_i(g,k) - min over H_{i+1} translates of g; the removed
  // minimum is H_{i+1} x (current dual period)-periodic and folds into the
  // next level. The final level inherits whatever remains, which stays
  // nonnegative because each subtracted minimum is bounded by f.
  // Inputs pass through periodic_average so the output parts are periodic
  // bitwise even when the caller's tables carry float dirt.
  const std::size_t levels = chain.size();
  std::vector<RealTable> current;
  current.reserve(levels);
  for (const auto& part : chain) current.push_back(periodic_average(part.table, part.subgroup));
  PeriodicDecomposition out;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const Subgroup& next = chain[i + 1].subgroup;
    RealTable mins{g, std::vector<double>(cells, 0.0)};
    for (int x = 0; x < n; ++x) {
      for (int chi = 0; chi < n; ++chi) {
        double m = current[i].at(g.add_index(x, next.indices.front()), chi);
        for (int s : next.indices) m = std::min(m, current[i].at(g.add_index(x, s), chi));
        mins.at(x, chi) = m;
      }
    }
    RealTable kept{g, std::vector<double>(cells)};
    for (int cell = 0; cell < cells; ++cell) {
      kept.values[cell] = current[i].values[cell] - mins.values[cell];
      current[i + 1].values[cell] += mins.values[cell];
    }
    out.parts.push_back(PeriodicPart{chain[i].subgroup, std::move(kept)});
  }
  out.parts.push_back(PeriodicPart{chain.back().subgroup, std::move(current.back())});

  double resum = 0.0;
  for (int cell = 0; cell < cells; ++cell) {
    double s = 0.0;
    for (const auto& part : out.parts) s += part.table.values[cell];
    resum = std::max(resum, std::abs(s - f.values[cell]));
  }
  if (resum > 1e-9) {
    throw std::runtime_error("greedy_nonnegative_repair: output does not re-sum to the table");
  }
  for (const auto& part : out.parts) {
    for (double v : part.table.values) {
      if (v < -1e-10) throw std::runtime_error("greedy_nonnegative_repair: negative output part");
    }
  }
  return out;
}

PeriodicDecomposition weights_by_subgroup(const Group& g,
                                          const std::vector<LabeledPureState>& states,
                                          const std::vector<double>& weights) {
  if (states.size() != weights.size()) {
    throw std::invalid_argument("weights_by_subgroup: size mismatch");
  }
  const int cells = g.order() * g.order();
  PeriodicDecomposition d;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& h = states[i].subgroup;
    PeriodicPart* slot = nullptr;
    for (auto& part : d.parts) {
      if (part.subgroup.indices == h.indices) {
        slot = &part;
        break;
      }
    }
    if (slot == nullptr) {
      d.parts.push_back(PeriodicPart{h, RealTable{g, std::vector<double>(cells, 0.0)}});
      slot = &d.parts.back();
    }
    if (weights[i] == 0.0) continue;
    const KDDistribution e = eta(states[i]);
    for (int c = 0; c < cells; ++c) slot->table.values[c] += weights[i] * e.values[c].real();
  }
  return d;
}

HullMembership membership_conv_pure(const Operator& rho) {
  return membership_conv_pure(rho, pure_positive_states(rho.group()));
}

HullMembership membership_conv_pure(const Operator& rho,
                                    const std::vector<LabeledPureState>& states) {
  const Group& g = rho.group();
  const int n = g.order();
  const int cells = n * n;
  if (states.empty()) throw std::invalid_argument("membership_conv_pure: no pure states");

  const KDDistribution q = kd_lower(rho);
  const RealTable target = real_part(q);

  // Columns are the flattened eta tables; one extra row pins sum(lambda) = 1.
  LPProblem p;
  p.rows = cells + 1;
  p.cols = static_cast<int>(states.size());
  p.a.assign(static_cast<std::size_t>(p.rows) * p.cols, 0.0);
  p.b.assign(p.rows, 0.0);
  std::vector<KDDistribution> etas;
  etas.reserve(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    etas.push_back(eta(states[s]));
    for (int c = 0; c < cells; ++c) {
      p.a[static_cast<std::size_t>(c) * p.cols + s] = etas.back().values[c].real();
    }
    p.a[static_cast<std::size_t>(cells) * p.cols + s] = 1.0;
  }
  for (int c = 0; c < cells; ++c) p.b[c] = target.values[c];
  p.b[cells] = 1.0;

  HullMembership result{lp_feasibility(p), {}, RealTable{g, std::vector<double>(cells, 0.0)}, 0.0, 0.0};

  if (result.lp.feasible) {
    result.weights = result.lp.weights;
    // Reconstruction check: the weighted projectors must reproduce the KD
    // table (and hence the state, the symbol map being injective).
    RealTable rebuilt{g, std::vector<double>(cells, 0.0)};
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (result.weights[s] == 0.0) continue;
      for (int c = 0; c < cells; ++c) {
        rebuilt.values[c] += result.weights[s] * etas[s].values[c].real();
      }
    }
    double err = 0.0;
    for (int c = 0; c < cells; ++c) err = std::max(err, std::abs(rebuilt.values[c] - target.values[c]));
    if (err > 1e-8) {
      throw std::runtime_error("membership_conv_pure: reconstruction check failed");
    }
    // Grouping by subgroup yields nonnegative periodic parts re-summing to Q.
    const PeriodicDecomposition grouped = weights_by_subgroup(g, states, result.weights);
    for (const auto& part : grouped.parts) {
      if (periodicity_defect(part.table, part.subgroup) > 1e-9) {
        throw std::runtime_error("membership_conv_pure: grouped part is not periodic");
      }
      for (double v : part.table.values) {
        if (v < -1e-10) throw std::runtime_error("membership_conv_pure: grouped part negative");
      }
    }
    return result;
  }

  // Bounding-plane form of the Farkas certificate: with J the all-ones table
  // (pairing 1 against every eta and against Q[rho]), W = -(y_cells) - y_last J
  // pairs >= 0 with every eta and < 0 with Q[rho].
  const auto& y = result.lp.certificate;
  const double y_last = y[cells];
  for (int c = 0; c < cells; ++c) result.witness.values[c] = -y[c] - y_last;
  double min_pure = std::numeric_limits<double>::infinity();
  for (const auto& e : etas) {
    min_pure = std::min(min_pure, table_pairing(result.witness, e).real());
  }
  result.witness_min_pure_pairing = min_pure;
  result.witness_state_pairing = table_pairing(result.witness, target);
  if (min_pure < -1e-10 || result.witness_state_pairing >= -1e-8) {
    throw std::runtime_error("membership_conv_pure: witness verification failed");
  }
  return result;
}

}  // namespace kdfab
