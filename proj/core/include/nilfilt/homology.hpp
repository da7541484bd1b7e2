#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/chain.hpp"

namespace nilfilt {

enum class Method { DirectSnf, IqPresentation, SequenceIII, WedgeFormula };

std::string method_name(Method m);

struct HomologyResult {
  std::string group;
  int q = 2;
  Space space = Space::B;
  int degree = 0;
  AbelianGroup value;
  Method method = Method::DirectSnf;
};

// H_i of the complex; requires i < dmax.
HomologyResult homology(const ChainComplex& c, int i);
// H_0..H_{dmax-1}, computing each boundary's invariant factors once.
std::vector<HomologyResult> homology_through(const ChainComplex& c);

// H_1(B(q,G)) = Z[G] / I_q(G), with I_q spanned by y - xy + x over
// admissible pairs (x, y).
HomologyResult h1_via_Iq(const FiniteGroup& g, int q, Variant v = {});

struct InducedH1Map {
  // Row r is the image in C_1(B) of the r-th fundamental cycle of the
  // 1-skeleton of E(q,G); these cycles generate H_1(E(q,G)).
  IntegerMatrix map;
  AbelianGroup h1_b;
  AbelianGroup cokernel;
  AbelianGroup abelianization;
  bool matches_abelianization = false;
  bool feit_thompson_flag = false;  // |G| odd and the map is not onto
};

InducedH1Map induced_h1_map(const FiniteGroup& g, int q, Variant v = {});

// H_1(B(2,G)) = (Z + sum C_i) / phi_*(sum^k Z) for a TC group, Z = Z(G).
// Throws ValidationError for a non-TC group.
HomologyResult tc_h1_via_sequence_III(const FiniteGroup& g);

// H_i(B(2,G)) for i in {1, 2} from the Sylow wedge decomposition. Requires a
// TC group with trivial center; throws ValidationError otherwise.
HomologyResult tc_homology_via_wedge(const FiniteGroup& g, int i);

// H_1(B(q,G)) for q = 2, 3, ..., N and inf, with the maps induced by the
// inclusions of tuple bases.
struct H1Chain {
  std::vector<int> qs;
  std::vector<AbelianGroup> h1;
  bool surjective = true;
};

H1Chain h1_surjectivity_chain(const FiniteGroup& g, Variant v = {});

// {"group":..,"q":..,"space":..,"i":..,"rank":..,"torsion":[..],"method":..}
std::string homology_json(const HomologyResult& r);

}  // namespace nilfilt
