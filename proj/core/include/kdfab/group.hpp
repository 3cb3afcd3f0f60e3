#pragma once

#include <compare>
#include <complex>
#include <memory>
#include <vector>

namespace kdfab {

// Element of a product of cyclic groups, one coordinate per factor, each
// reduced modulo the factor order.
struct GroupElement {
  std::vector<int> coords;
  auto operator<=>(const GroupElement&) const = default;
};

// Finite abelian group Z_{d1} x ... x Z_{dk}. Immutable and cheap to copy.
//
// Elements are enumerated lexicographically on coords, identity first; every
// table in this library uses that order. The same index space doubles as the
// dual group, with the pairing chi(g) = exp(+2*pi*i * sum_j chi_j g_j / d_j).
// Characters are stored as exact roots of unity (integer angle numerators),
// so chi(g) == 1 is an integer test, not a float comparison.
class Group {
public:
  static constexpr int kDefaultMaxOrder = 64;

  explicit Group(std::vector<int> orders, int max_order = kDefaultMaxOrder);

  int order() const { return data_->order; }
  const std::vector<int>& orders() const { return data_->orders; }
  std::size_t factor_count() const { return data_->orders.size(); }

  GroupElement element(int index) const;
  int index(const GroupElement& e) const;
  GroupElement identity() const { return element(0); }

  int add_index(int a, int b) const {
    return data_->add[static_cast<std::size_t>(a) * data_->order + b];
  }
  int neg_index(int a) const { return data_->neg[a]; }
  int sub_index(int a, int b) const { return add_index(a, neg_index(b)); }

  // chi(g) for flat element indices chi (dual side) and g.
  std::complex<double> character(int chi, int g) const {
    return data_->roots[pairing_numerator(chi, g)];
  }
  // Numerator t of the pairing angle 2*pi*t/L with L = lcm of the orders.
  int pairing_numerator(int chi, int g) const {
    return data_->pairing[static_cast<std::size_t>(chi) * data_->order + g];
  }
  int root_order() const { return data_->root_order; }

  bool operator==(const Group& o) const {
    return data_ == o.data_ || data_->orders == o.data_->orders;
  }

private:
  struct Data {
    std::vector<int> orders;
    int order = 1;
    int root_order = 1;
    std::vector<int> add;
    std::vector<int> neg;
    std::vector<int> pairing;
    std::vector<std::complex<double>> roots;
  };
  std::shared_ptr<const Data> data_;
};

Group make_group(const std::vector<int>& orders,
                 int max_order = Group::kDefaultMaxOrder);

GroupElement add(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const Group& g, const GroupElement& a);
std::complex<double> char_eval(const Group& g, const GroupElement& chi,
                               const GroupElement& x);

// Subgroup given by its sorted element list plus a generating set whose
// closure reproduces the elements. `parent` may be read as G or as its dual
// depending on context (annihilators live on the dual index space).
struct Subgroup {
  Group parent;
  std::vector<GroupElement> elements;   // sorted, identity first
  std::vector<GroupElement> generators;
  std::vector<int> indices;             // flat indices, ascending
  std::vector<char> mask;               // size |G|, 1 for members

  int order() const { return static_cast<int>(elements.size()); }
  bool contains_index(int i) const { return mask[static_cast<std::size_t>(i)] != 0; }
};

// Closure of a generating set under addition; always contains the identity.
Subgroup subgroup_closure(const Group& g, const std::vector<GroupElement>& generators);

// Complete, duplicate-free subgroup list, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const Group& g);

// Characters equal to 1 on all of H; satisfies |H| * |annihilator| = |G|.
Subgroup annihilator(const Group& g, const Subgroup& h);

// Lexicographically smallest member of each coset of H, in ascending order.
std::vector<GroupElement> coset_representatives(const Group& g, const Subgroup& h);
std::vector<int> coset_representative_indices(const Group& g, const Subgroup& h);

}  // namespace kdfab
