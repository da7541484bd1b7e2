#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilfilt/integer_matrix.hpp"

namespace nilfilt {

// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dm with
// d1 | d2 | ... | dm and every di >= 2.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;

  // Canonical form of Z^rank + sum Z/n_i. Orders of 1 are dropped; an order
  // of 0 counts as a free summand.
  static AbelianGroup from_cyclic_orders(std::size_t rank, const std::vector<BigInt>& orders);
  static AbelianGroup from_cyclic_orders(std::size_t rank, const std::vector<std::int64_t>& orders);

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool is_finite() const { return rank == 0; }
  // Order of the torsion part.
  BigInt torsion_order() const;
  // Primes dividing some invariant factor, ascending.
  std::vector<std::int64_t> torsion_primes() const;
  std::string to_string() const;

  friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b);
  bool operator==(const AbelianGroup&) const = default;
};

// gcd/lcm normalization of a list of positive integers into a divisibility
// chain of the same length (units kept).
std::vector<BigInt> normalize_divisibility_chain(std::vector<BigInt> values);

std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace nilfilt
