#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/homspace.hpp"
#include "nilfilt/subgroup.hpp"

namespace nilfilt {

inline constexpr std::size_t kMaxFamilyGroupOrder = 256;

// N_q(G): every subgroup of class < q, canonically sorted.
struct NilFamily {
  int q = 2;
  Variant variant;
  std::vector<Subgroup> members;
  std::vector<Subgroup> maximal;
};

// Throws GuardExceeded above kMaxFamilyGroupOrder.
NilFamily nil_family(const FiniteGroup& g, int q, Variant v = {});

// Inclusion-maximal subgroups of class < q, canonically sorted.
std::vector<Subgroup> maximal_nil_subgroups(const FiniteGroup& g, int q, Variant v = {});

// P_q(G): maximal members and their pairwise intersections.
struct GroupGraph {
  std::vector<Subgroup> vertices;
  std::vector<std::size_t> maximal;                          // vertex ids of the maximal members
  std::vector<std::pair<std::size_t, std::size_t>> morphisms;  // M_a ∩ M_b -> M_a, non-identity
  std::vector<std::pair<std::size_t, std::size_t>> hasse;      // covering inclusions, (smaller, larger)
  bool is_tree = true;                                         // of the Hasse diagram
};

GroupGraph poset_graph(const FiniteGroup& g, int q, Variant v = {});
// One line per Hasse edge: from, to, |from|, |to|.
std::string group_graph_tsv(const GroupGraph& gg);

using Word = std::vector<int>;  // 1-based generator indices, negative for inverses

// Colimit of the maximal members glued along shared elements.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Elem> images;  // generator -> element of G
  std::vector<Word> relators;
  AbelianGroup abelianization;
  bool surjects = false;  // relators hold in G and the images generate G
};

Presentation colimit_presentation(const FiniteGroup& g, int q, Variant v = {});
// "gens: g1 g2 ... ; rels: w1, w2, ..." with words as signed generator ids.
std::string presentation_text(const Presentation& p);

}  // namespace nilfilt
