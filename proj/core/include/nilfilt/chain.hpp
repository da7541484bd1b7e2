#pragma once

#include <string>
#include <vector>

#include "nilfilt/homspace.hpp"
#include "nilfilt/integer_matrix.hpp"

namespace nilfilt {

enum class Space { B, E };

std::string space_name(Space s);

inline constexpr std::size_t kMaxChainBasis = 500000;

// Normalized chains of B_*(q,G) or E_*(q,G) in degrees 0..dmax. The degree-d
// basis of B is the identity-free admissible d-tuples in lexicographic order;
// for E it is (a, t) with index a * mu_d + index(t).
struct ChainComplex {
  const FiniteGroup* group = nullptr;
  int q = 2;
  Variant variant;
  Space space = Space::B;
  int dmax = 0;
  std::vector<std::vector<Elem>> tuples;  // B-tuples per degree, flattened
  std::vector<std::size_t> sizes;         // basis size per degree
  // boundary[d] has one row per d-simplex and one column per (d-1)-simplex;
  // boundary[0] is sizes[0] x 0.
  std::vector<IntegerMatrix> boundary;

  std::size_t tuple_count(int d) const { return d == 0 ? 1 : tuples[d].size() / static_cast<std::size_t>(d); }
  // Index of an identity-free admissible d-tuple, or npos.
  std::size_t index_of(int d, const Elem* t) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// Throws GuardExceeded when the total basis size passes kMaxChainBasis and
// InternalError if the boundary maps fail to compose to zero.
ChainComplex build_chain_complex(const FiniteGroup& g, int q, Space space, int dmax, Variant v = {},
                                 std::size_t max_basis = kMaxChainBasis);

}  // namespace nilfilt
