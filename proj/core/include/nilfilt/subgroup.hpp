#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/group.hpp"

namespace nilfilt {

// A subgroup of a FiniteGroup, stored as its element set plus the generators
// it was built from. The parent must outlive the subgroup.
class Subgroup {
 public:
  // Closure of `gens` in g. Empty gens give the trivial subgroup.
  static Subgroup generated(const FiniteGroup& g, std::span<const Elem> gens);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);
  // `elems` must already be a subgroup; a small generating set is derived.
  // Throws ValidationError if `elems` is not closed.
  static Subgroup from_elements(const FiniteGroup& g, const ElementSet& elems);
  // Trusted constructor: `elems` is the closure of `gens`.
  static Subgroup from_closure(const FiniteGroup& g, ElementSet elems, std::vector<Elem> gens);

  const FiniteGroup& parent() const { return *parent_; }
  std::size_t order() const { return elements_.size(); }
  const ElementSet& set() const { return set_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }

  bool contains(Elem x) const { return set_.contains(x); }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_subgroup_of(const Subgroup& other) const { return set_.is_subset_of(other.set_); }
  bool is_abelian() const;
  bool is_normal() const;

  // g^-1 H g
  Subgroup conjugate(Elem g) const;

  // Same element set (parents assumed equal).
  bool operator==(const Subgroup& other) const { return set_ == other.set_; }
  // Canonical order: lexicographic on the sorted element lists.
  bool operator<(const Subgroup& other) const { return set_.lex_less(other.set_); }

 private:
  Subgroup(const FiniteGroup& g, ElementSet set, std::vector<Elem> gens);

  const FiniteGroup* parent_ = nullptr;
  ElementSet set_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

// Closure of `start` (already closed under `old_gens`, if any) after adjoining
// `extra`. Returns the element set and the generator list used.
ElementSet close_set(const FiniteGroup& g, const ElementSet& start, std::span<const Elem> old_gens,
                     std::span<const Elem> extra);

inline Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  return Subgroup::generated(g, gens);
}

// <H, x>
Subgroup join(const Subgroup& h, Elem x);

// [H, K] = < h^-1 k^-1 h k >. Throws ValidationError when parents differ.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

struct SeriesKind {
  int prime = 0;  // 0: lower central series; p: p-lower central series

  static SeriesKind lower_central() { return {}; }
  static SeriesKind p_lower_central(int p) { return {p}; }
  bool p_local() const { return prime != 0; }
  bool operator==(const SeriesKind&) const = default;
};

struct SeriesRecord {
  SeriesKind kind;
  std::vector<Subgroup> terms;           // terms[0] = H, strictly descending
  std::optional<int> nilpotency_class;   // nullopt: stabilizes at a nontrivial term
};

// Next term of the series below `term` inside `h`:
//   lower central  [term, H]
//   p-variant      [term, H] (term)^p
Subgroup next_series_term(const Subgroup& term, const Subgroup& h, SeriesKind kind);

SeriesRecord central_series(const Subgroup& h, SeriesKind kind = SeriesKind::lower_central());

// Sentinel for an unbounded nilpotency bound q.
inline constexpr int kQInfinity = -1;

// True iff Gamma^q(H) is trivial, i.e. the (p-)class of H is below q.
// q = kQInfinity accepts every subgroup.
bool class_below(const Subgroup& h, int q, SeriesKind kind = SeriesKind::lower_central());

Subgroup centralizer(const FiniteGroup& g, std::span<const Elem> s);
Subgroup center(const FiniteGroup& g);
Subgroup normalizer(const Subgroup& h);

struct ConjugacyClasses {
  std::vector<std::vector<Elem>> classes;  // sorted; ordered by least element
  std::vector<Elem> representatives;       // least element of each class
  std::vector<std::size_t> class_of;       // element id -> class index
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

// All Sylow p-subgroups, canonically sorted. If p does not divide |G| the
// result is the trivial subgroup alone.
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, int p);

// Largest power of p dividing n.
std::size_t p_part(std::size_t n, int p);

// H/[H,H] as invariant factors.
AbelianGroup abelian_invariants(const Subgroup& h);

// Abelian subgroup presented on a generating set: relations generate the
// kernel of Z^gens -> H, and coords[x] is an exponent vector for each x in H.
struct AbelianPresentation {
  std::vector<Elem> generators;
  IntegerMatrix relations;                       // rows over the generator columns
  std::vector<std::vector<long long>> coords;    // indexed by parent element id
};

// Throws ValidationError if H is not abelian.
AbelianPresentation abelian_presentation(const Subgroup& h);
AbelianGroup abelian_decomposition(const Subgroup& h);

}  // namespace nilfilt
