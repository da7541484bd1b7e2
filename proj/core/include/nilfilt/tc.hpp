#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nilfilt/abelian_group.hpp"
#include "nilfilt/subgroup.hpp"

namespace nilfilt {

struct TCCheck {
  bool is_tc = false;
  std::optional<Elem> witness;  // noncentral element with nonabelian centralizer
  std::string note;
};

TCCheck is_tc(const FiniteGroup& g);

// The four equivalent characterizations, each checked independently.
// Abelian groups satisfy all of them vacuously.
bool tc_condition_a(const FiniteGroup& g);  // C(g) abelian for g noncentral
bool tc_condition_b(const FiniteGroup& g);  // [g,h]=1, g,h noncentral => C(g)=C(h)
bool tc_condition_c(const FiniteGroup& g);  // [g,h]=1=[h,k], h noncentral => [g,k]=1
bool tc_condition_d(const FiniteGroup& g);  // Z < C(A) <= C(B) < G => C(A)=C(B)

struct CentralizerCover {
  std::vector<Elem> representatives;  // least element with each centralizer
  std::vector<Subgroup> subgroups;    // canonically sorted
};

// Distinct centralizers of noncentral elements. Throws ValidationError for a
// non-TC group.
CentralizerCover centralizer_cover(const FiniteGroup& g);

struct WedgeTerm {
  int prime = 0;
  AbelianGroup sylow;
  std::size_t multiplicity = 0;
};

struct TCReport {
  TCCheck check;
  CentralizerCover cover;
  std::size_t k = 0;
  std::size_t center_order = 0;
  long long n_g = 0;  // rank of the free group pi_1(E(2,G))
  boost::rational<long long> chi;
  std::vector<WedgeTerm> wedge;  // only for trivial center
};

// Throws ValidationError for a non-TC group. Checks N_G = 1 - chi*|G|.
TCReport tc_invariants(const FiniteGroup& g);

struct ClassFunction {
  std::vector<long long> values;  // per conjugacy class
  ConjugacyClasses classes;
  std::vector<Elem> kernel;       // elements with value equal to the value at 1
};

// Character of G on H_1(E(2,G)) (x) C, from permutation characters.
ClassFunction character_M2(const FiniteGroup& g);

}  // namespace nilfilt
