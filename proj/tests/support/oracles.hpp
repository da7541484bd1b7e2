#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. None of these share code with the library beyond FiniteGroup's
// multiplication table.

#include <cstdint>
#include <set>
#include <vector>

#include "nilfilt/group.hpp"

namespace oracle {

using nilfilt::Elem;
using nilfilt::FiniteGroup;
using ElemSet = std::set<Elem>;
using Dense = std::vector<std::vector<long long>>;

// Multiply everything by everything until nothing new appears.
ElemSet closure(const FiniteGroup& g, const std::vector<Elem>& gens);
// Subgroup generated by all commutators [h, k], h in H, k in K.
ElemSet commutator_set(const FiniteGroup& g, const ElemSet& h, const ElemSet& k);
// Nilpotency class by iterating commutator_set; -1 if not nilpotent.
int nilpotency_class(const FiniteGroup& g, const ElemSet& h);
// Class of the p-descending series; -1 if it stabilizes above 1.
int p_class(const FiniteGroup& g, const ElemSet& h, int p);
bool admissible(const FiniteGroup& g, const std::vector<Elem>& tuple, int q, int p = 0);

// Enumerate all |G|^n tuples.
std::uint64_t count_tuples(const FiniteGroup& g, int n, int q, int p = 0, int min_identities = 0,
                           bool identity_free = false);
// Admissible n-tuples split into simultaneous-conjugation orbits.
std::uint64_t orbit_count(const FiniteGroup& g, int n, int q);

// Every subgroup, by closing all subsets reachable from pairs of elements and
// joining until stable. Small groups only.
std::vector<ElemSet> all_subgroups(const FiniteGroup& g);

// Textbook Smith normal form: clear the first row and column with the
// Euclidean algorithm, fix divisibility, recurse. Returns the nonzero
// diagonal, nonnegative.
std::vector<long long> naive_snf(Dense a);

// Invariant factors of Z^cols / rowspace, as (free rank, torsion list).
std::pair<std::size_t, std::vector<long long>> naive_cokernel(const Dense& a, std::size_t cols);

// Backtracking search for an isomorphism G -> H.
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace oracle
