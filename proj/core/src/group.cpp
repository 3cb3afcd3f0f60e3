#include "kdfab/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kdfab {

Group::Group(std::vector<int> orders, int max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  long long product = 1;
  for (int d : orders) {
    if (d < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
    product *= d;
    if (product > max_order) {
      throw std::invalid_argument("group order " + std::to_string(product) +
                                  "+ exceeds maximum " + std::to_string(max_order));
    }
  }
  auto data = std::make_shared<Data>();
  data->orders = std::move(orders);
  data->order = static_cast<int>(product);

  const int n = data->order;
  const std::size_t k = data->orders.size();

  int lcm = 1;
  for (int d : data->orders) lcm = std::lcm(lcm, d);
  data->root_order = lcm;
  data->roots.resize(lcm);
  for (int t = 0; t < lcm; ++t) {
    const double angle = 2.0 * std::numbers::pi * t / lcm;
    data->roots[t] = {std::cos(angle), std::sin(angle)};
  }

  // Flat index is mixed-radix with coords[0] most significant, so ascending
  // index order equals lexicographic order on coords.
  std::vector<std::vector<int>> coords(n, std::vector<int>(k));
  for (int i = 0; i < n; ++i) {
    int rest = i;
    for (std::size_t j = k; j-- > 0;) {
      coords[i][j] = rest % data->orders[j];
      rest /= data->orders[j];
    }
  }

  data->add.resize(static_cast<std::size_t>(n) * n);
  data->neg.resize(n);
  data->pairing.resize(static_cast<std::size_t>(n) * n);
  std::vector<int> tmp(k);
  for (int a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      tmp[j] = (data->orders[j] - coords[a][j]) % data->orders[j];
    }
    int neg_idx = 0;
    for (std::size_t j = 0; j < k; ++j) neg_idx = neg_idx * data->orders[j] + tmp[j];
    data->neg[a] = neg_idx;
    for (int b = 0; b < n; ++b) {
      int sum_idx = 0;
      long long t = 0;
      for (std::size_t j = 0; j < k; ++j) {
        sum_idx = sum_idx * data->orders[j] + (coords[a][j] + coords[b][j]) % data->orders[j];
        t += static_cast<long long>(coords[a][j]) * coords[b][j] * (lcm / data->orders[j]);
      }
      data->add[static_cast<std::size_t>(a) * n + b] = sum_idx;
      data->pairing[static_cast<std::size_t>(a) * n + b] = static_cast<int>(t % lcm);
    }
  }
  data_ = std::move(data);
}

GroupElement Group::element(int index) const {
  if (index < 0 || index >= order()) throw std::invalid_argument("element index out of range");
  const auto& ord = data_->orders;
  GroupElement e;
  e.coords.resize(ord.size());
  int rest = index;
  for (std::size_t j = ord.size(); j-- > 0;) {
    e.coords[j] = rest % ord[j];
    rest /= ord[j];
  }
  return e;
}

int Group::index(const GroupElement& e) const {
  const auto& ord = data_->orders;
  if (e.coords.size() != ord.size()) {
    throw std::invalid_argument("element has wrong number of coordinates");
  }
  int idx = 0;
  for (std::size_t j = 0; j < ord.size(); ++j) {
    const int c = e.coords[j];
    if (c < 0 || c >= ord[j]) throw std::invalid_argument("element coordinate out of range");
    idx = idx * ord[j] + c;
  }
  return idx;
}

Group make_group(const std::vector<int>& orders, int max_order) {
  return Group(orders, max_order);
}

GroupElement add(const Group& g, const GroupElement& a, const GroupElement& b) {
  return g.element(g.add_index(g.index(a), g.index(b)));
}

GroupElement negate(const Group& g, const GroupElement& a) {
  return g.element(g.neg_index(g.index(a)));
}

std::complex<double> char_eval(const Group& g, const GroupElement& chi,
                               const GroupElement& x) {
  return g.character(g.index(chi), g.index(x));
}

namespace {

// Closure of a seed set under addition. Finite, so closure under addition
// already contains inverses.
std::vector<int> close_indices(const Group& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members;
  in[0] = 1;
  members.push_back(0);
  for (int s : seed) {
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const int s = g.add_index(members[i], members[j]);
      if (!in[s]) {
        in[s] = 1;
        members.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup build_subgroup(const Group& g, std::vector<int> indices,
                        std::vector<int> generator_indices) {
  Subgroup h{g, {}, {}, {}, {}};
  h.indices = std::move(indices);
  h.mask.assign(g.order(), 0);
  h.elements.reserve(h.indices.size());
  for (int i : h.indices) {
    h.mask[i] = 1;
    h.elements.push_back(g.element(i));
  }
  h.generators.reserve(generator_indices.size());
  for (int i : generator_indices) h.generators.push_back(g.element(i));
  return h;
}

// Deterministic small generating set for a known element list.
std::vector<int> greedy_generators(const Group& g, const std::vector<int>& indices) {
  std::vector<int> gens;
  std::vector<int> span = close_indices(g, {});
  for (int e : indices) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    gens.push_back(e);
    auto seed = span;
    seed.push_back(e);
    span = close_indices(g, seed);
    if (span.size() == indices.size()) break;
  }
  return gens;
}

}  // namespace

Subgroup subgroup_closure(const Group& g, const std::vector<GroupElement>& generators) {
  std::vector<int> seed, gen_idx;
  seed.reserve(generators.size());
  for (const auto& e : generators) {
    const int i = g.index(e);
    seed.push_back(i);
    gen_idx.push_back(i);
  }
  return build_subgroup(g, close_indices(g, seed), gen_idx);
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  // Breadth-first closure: extend every known subgroup by one outside element
  // and close; deduplicate by the sorted element list.
  std::map<std::vector<int>, std::vector<int>> generators_of;
  std::vector<std::vector<int>> queue;
  const auto trivial = close_indices(g, {});
  generators_of[trivial] = {};
  queue.push_back(trivial);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto current = queue[qi];
    const auto current_gens = generators_of[current];
    std::vector<char> in(g.order(), 0);
    for (int e : current) in[e] = 1;
    for (int e = 1; e < g.order(); ++e) {
      if (in[e]) continue;
      auto seed = current;
      seed.push_back(e);
      auto closed = close_indices(g, seed);
      if (generators_of.find(closed) == generators_of.end()) {
        auto gens = current_gens;
        gens.push_back(e);
        generators_of[closed] = gens;
        queue.push_back(closed);
      }
    }
  }
  std::vector<Subgroup> result;
  result.reserve(generators_of.size());
  for (const auto& [elements, gens] : generators_of) {
    result.push_back(build_subgroup(g, elements, gens));
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return a.indices < b.indices;
  });
  return result;
}

Subgroup annihilator(const Group& g, const Subgroup& h) {
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  std::vector<int> indices;
  for (int chi = 0; chi < g.order(); ++chi) {
    bool vanishes = true;
    for (int e : h.indices) {
      if (g.pairing_numerator(chi, e) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) indices.push_back(chi);
  }
  return build_subgroup(g, indices, greedy_generators(g, indices));
}

std::vector<int> coset_representative_indices(const Group& g, const Subgroup& h) {
  if (!(h.parent == g)) throw std::invalid_argument("subgroup belongs to a different group");
  std::vector<char> visited(g.order(), 0);
  std::vector<int> reps;
  for (int e = 0; e < g.order(); ++e) {
    if (visited[e]) continue;
    reps.push_back(e);
    for (int s : h.indices) visited[g.add_index(e, s)] = 1;
  }
  return reps;
}

std::vector<GroupElement> coset_representatives(const Group& g, const Subgroup& h) {
  std::vector<GroupElement> reps;
  for (int i : coset_representative_indices(g, h)) reps.push_back(g.element(i));
  return reps;
}

}  // namespace kdfab
