#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilfilt/element_set.hpp"
#include "nilfilt/errors.hpp"

namespace nilfilt {

inline constexpr std::size_t kMaxGroupOrder = 1024;

// A finite group stored as its full multiplication table. Elements are the
// dense ids 0..order-1 and the identity is always id 0. Immutable once built.
class FiniteGroup {
 public:
  static constexpr Elem kIdentity = 0;

  FiniteGroup() = default;

  // Validates the table (Latin square, identity at 0, associativity) and
  // throws ValidationError on any violation.
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<Elem>>& table,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return kIdentity; }
  Elem pow(Elem a, std::int64_t k) const;
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  // g^-1 x g
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  std::size_t element_order(Elem a) const { return elem_order_[a]; }
  bool is_abelian() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;
  // Id of the element with the given label, or order() when absent.
  Elem find_label(const std::string& text) const;

  std::vector<std::vector<Elem>> table() const;
  ElementSet empty_set() const { return ElementSet(order_); }
  ElementSet all_elements() const;

  // Equal name, table and labels.
  bool operator==(const FiniteGroup& other) const;

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> elem_order_;
  std::vector<std::string> labels_;
};

// Closes `gens` under multiplication in some concrete representation and
// records the resulting Cayley table. `T` needs operator<; `mul(a, b)` and
// `label(a)` supply the arithmetic and display names. The identity gets id 0
// and the other elements appear in breadth-first order.
template <class T, class Mul, class Label>
FiniteGroup group_from_generators(std::string name, const T& identity, const std::vector<T>& gens,
                                  Mul mul, Label label, std::size_t max_order = kMaxGroupOrder) {
  std::vector<T> elems{identity};
  std::map<T, Elem> index{{identity, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      T p = mul(elems[i], g);
      if (index.count(p)) continue;
      if (elems.size() >= max_order)
        throw GuardExceeded("group '" + name + "': closure exceeds order bound " + std::to_string(max_order));
      index.emplace(p, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(p));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(mul(elems[a], elems[b]));
      if (it == index.end()) throw ValidationError("group '" + name + "': generators do not close");
      table[a][b] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(label(e));
  return FiniteGroup::from_table(std::move(name), table, std::move(labels));
}

}  // namespace nilfilt
