#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "kdfab/convex.hpp"

namespace kdtest {

struct Rng {
  std::mt19937_64 eng{7};
  explicit Rng(unsigned long long seed = 7) : eng(seed) {}
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng); }
  std::complex<double> gaussian() { return {normal(), normal()}; }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
};

inline kdfab::Operator random_operator(const kdfab::Group& g, Rng& rng) {
  kdfab::Operator a(g);
  for (auto& e : a.entries()) e = rng.gaussian();
  return a;
}

inline kdfab::Operator random_hermitian(const kdfab::Group& g, Rng& rng) {
  kdfab::Operator a = random_operator(g, rng);
  kdfab::Operator h = a;
  h += a.dagger();
  h *= 0.5;
  return h;
}

inline kdfab::Operator random_density(const kdfab::Group& g, Rng& rng) {
  const kdfab::Operator a = random_operator(g, rng);
  kdfab::Operator rho = kdfab::matmul(a, a.dagger());
  rho *= 1.0 / rho.trace();
  return rho;
}

inline kdfab::StateVector random_state(const kdfab::Group& g, Rng& rng) {
  kdfab::StateVector psi{g, std::vector<std::complex<double>>(g.order())};
  for (auto& a : psi.amplitudes) a = rng.gaussian();
  const double n = psi.norm();
  for (auto& a : psi.amplitudes) a /= n;
  return psi;
}

// Independent oracle: count subgroups by testing every subset containing the
// identity for closure. Only sensible for tiny groups.
inline int brute_force_subgroup_count(const kdfab::Group& g) {
  const int n = g.order();
  int count = 0;
  for (unsigned long long bits = 1; bits < (1ull << n); ++bits) {
    if (!(bits & 1ull)) continue;  // must contain the identity
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(bits >> a & 1ull)) continue;
      for (int b = a; b < n && closed; ++b) {
        if (!(bits >> b & 1ull)) continue;
        if (!(bits >> g.add_index(a, b) & 1ull)) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

// Primary decompositions of every abelian group of order 1..max_order, one
// per isomorphism class.
inline std::vector<std::vector<int>> abelian_groups_up_to(int max_order) {
  auto partitions = [](int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (int p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        self(self, rest - p, p);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };
  std::vector<std::vector<int>> groups;
  for (int order = 1; order <= max_order; ++order) {
    std::vector<std::pair<int, int>> factorization;  // (prime, exponent)
    int rest = order;
    for (int p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      factorization.push_back({p, e});
    }
    if (rest > 1) factorization.push_back({rest, 1});
    std::vector<std::vector<int>> combos = {{}};
    for (const auto& [p, e] : factorization) {
      std::vector<std::vector<int>> next;
      for (const auto& part : partitions(e)) {
        std::vector<int> factors;
        for (int k : part) {
          int pk = 1;
          for (int i = 0; i < k; ++i) pk *= p;
          factors.push_back(pk);
        }
        for (const auto& base : combos) {
          auto combined = base;
          combined.insert(combined.end(), factors.begin(), factors.end());
          next.push_back(combined);
        }
      }
      combos = std::move(next);
    }
    for (auto& c : combos) {
      if (c.empty()) c = {1};
      groups.push_back(c);
    }
  }
  return groups;
}

}  // namespace kdtest
