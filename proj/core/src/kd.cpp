#include "kdfab/kd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kdfab {

std::complex<double> KDDistribution::sum() const {
  std::complex<double> s = 0.0;
  for (const auto& v : values) s += v;
  return s;
}

double KDDistribution::min_real() const {
  double m = values.empty() ? 0.0 : values.front().real();
  for (const auto& v : values) m = std::min(m, v.real());
  return m;
}

double KDDistribution::max_abs_imag() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
  return m;
}

RealTable real_part(const KDDistribution& f) {
  RealTable t{f.group, std::vector<double>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) t.values[i] = f.values[i].real();
  return t;
}

KDDistribution to_complex(const RealTable& f) {
  KDDistribution q{f.group, std::vector<std::complex<double>>(f.values.size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) q.values[i] = f.values[i];
  return q;
}

KDDistribution kd_lower(const Operator& c) {
  const Group& g = c.group();
  const int n = g.order();
  KDDistribution q{g, std::vector<std::complex<double>>(static_cast<std::size_t>(n) * n)};
  // <b_chi|a_g><a_g|C|b_chi> = (1/|G|) conj(chi(g)) sum_y C[g][y] chi(y)
  const double inv_n = 1.0 / n;
  for (int x = 0; x < n; ++x) {
    for (int chi = 0; chi < n; ++chi) {
      std::complex<double> acc = 0.0;
      for (int y = 0; y < n; ++y) acc += c.at(x, y) * g.character(chi, y);
      q.at(x, chi) = inv_n * std::conj(g.character(chi, x)) * acc;
    }
  }
  return q;
}

KDDistribution kd_upper(const Operator& c) {
  KDDistribution q = kd_lower(c);
  const double n = q.group.order();
  for (auto& v : q.values) v *= n;
  return q;
}

Operator kd_lower_inverse(const KDDistribution& f) {
  const Group& g = f.group;
  const int n = g.order();
  if (static_cast<int>(f.values.size()) != n * n) {
    throw std::invalid_argument("table size does not match group order");
  }
  // C[x][y] = sum_chi f(x,chi) chi(x-y)
  Operator c(g);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int d = g.sub_index(x, y);
      std::complex<double> acc = 0.0;
      for (int chi = 0; chi < n; ++chi) acc += f.at(x, chi) * g.character(chi, d);
      c.at(x, y) = acc;
    }
  }
  return c;
}

KDDistribution kd_translate(const KDDistribution& f, const GroupElement& g0,
                            const GroupElement& chi0) {
  const Group& g = f.group;
  const int n = g.order();
  const int g0i = g.index(g0);
  const int chi0i = g.index(chi0);
  KDDistribution out{g, std::vector<std::complex<double>>(f.values.size())};
  for (int x = 0; x < n; ++x) {
    for (int chi = 0; chi < n; ++chi) {
      out.at(x, chi) = f.at(g.sub_index(x, g0i), g.sub_index(chi, chi0i));
    }
  }
  return out;
}

std::complex<double> overlap(const Operator& c, const Operator& d) {
  if (!(c.group() == d.group())) throw std::invalid_argument("operators on different groups");
  std::complex<double> direct = 0.0;
  for (std::size_t i = 0; i < c.entries().size(); ++i) {
    direct += std::conj(c.entries()[i]) * d.entries()[i];
  }
  const KDDistribution qc = kd_upper(c);
  const KDDistribution qd = kd_lower(d);
  std::complex<double> via_symbols = 0.0;
  for (std::size_t i = 0; i < qc.values.size(); ++i) {
    via_symbols += std::conj(qc.values[i]) * qd.values[i];
  }
  const double tol = 1e-10 * std::max(1.0, std::abs(direct));
  if (std::abs(direct - via_symbols) > tol) {
    throw std::runtime_error("overlap: direct trace and symbol sum disagree");
  }
  return direct;
}

std::complex<double> table_pairing(const RealTable& w, const KDDistribution& q) {
  if (!(w.group == q.group)) throw std::invalid_argument("tables on different groups");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i) acc += w.values[i] * q.values[i];
  return acc;
}

double table_pairing(const RealTable& w, const RealTable& q) {
  if (!(w.group == q.group)) throw std::invalid_argument("tables on different groups");
  double acc = 0.0;
  for (std::size_t i = 0; i < w.values.size(); ++i) acc += w.values[i] * q.values[i];
  return acc;
}

}  // namespace kdfab
