#pragma once

#include <complex>
#include <vector>

#include "kdfab/operators.hpp"

namespace kdfab {

// Complex table on G x dual(G); row = g, column = chi, canonical order both
// ways. Values stay complex even when mathematically real; realness is
// asserted where claimed, never assumed.
struct KDDistribution {
  Group group;
  std::vector<std::complex<double>> values;  // row-major, |G|^2

  std::complex<double>& at(int g, int chi) {
    return values[static_cast<std::size_t>(g) * group.order() + chi];
  }
  const std::complex<double>& at(int g, int chi) const {
    return values[static_cast<std::size_t>(g) * group.order() + chi];
  }
  std::complex<double> sum() const;
  double min_real() const;
  double max_abs_imag() const;
};

// Real table in the same layout; used for witnesses and periodic parts.
struct RealTable {
  Group group;
  std::vector<double> values;

  double& at(int g, int chi) {
    return values[static_cast<std::size_t>(g) * group.order() + chi];
  }
  const double& at(int g, int chi) const {
    return values[static_cast<std::size_t>(g) * group.order() + chi];
  }
};

RealTable real_part(const KDDistribution& f);
KDDistribution to_complex(const RealTable& f);

// Q[C](g,chi) = <b_chi|a_g><a_g|C|b_chi>. Sums to Tr C; row sums are the
// a-basis diagonal, column sums the b-basis diagonal.
KDDistribution kd_lower(const Operator& c);

// Qtilde[C](g,chi) = <a_g|C|b_chi> / <a_g|b_chi> = |G| Q[C](g,chi) for this
// mutually unbiased pair.
KDDistribution kd_upper(const Operator& c);

// Q^{-1}[f] = |G| sum_{g,chi} <a_g|b_chi> f(g,chi) |a_g><b_chi|.
Operator kd_lower_inverse(const KDDistribution& f);

// Table translation (g,chi) -> f(g-g0, chi-chi0); matches conjugating the
// source operator by M_chi0 T_g0.
KDDistribution kd_translate(const KDDistribution& f, const GroupElement& g0,
                            const GroupElement& chi0);

// Tr C^dagger D computed directly and through the symbol sum
// sum conj(Qtilde[C]) Q[D]; throws if the two routes disagree, returns the
// direct value.
std::complex<double> overlap(const Operator& c, const Operator& d);

// Frobenius pairings sum_{g,chi} w(g,chi) q(g,chi) with a real left factor.
std::complex<double> table_pairing(const RealTable& w, const KDDistribution& q);
double table_pairing(const RealTable& w, const RealTable& q);

}  // namespace kdfab
