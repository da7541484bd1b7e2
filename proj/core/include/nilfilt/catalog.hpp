#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nilfilt/group.hpp"

namespace nilfilt {

// Permutation of {0..degree-1}; images[i] is the image of point i.
// Products apply the left factor first: (p * q)(x) = q(p(x)).
struct Perm {
  std::vector<std::uint8_t> images;

  static Perm identity(std::size_t degree);
  // Cycles over 1-based points, e.g. {{1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);
  std::size_t degree() const { return images.size(); }
  std::vector<std::vector<int>> cycles() const;  // 1-based, fixed points omitted
  std::string to_string() const;                 // "(1,2)(3,4)" or "()"
  bool operator<(const Perm& o) const { return images < o.images; }
  bool operator==(const Perm& o) const = default;
};

Perm operator*(const Perm& a, const Perm& b);

inline constexpr std::size_t kMaxPermDegree = 16;

enum class Family {
  Cyclic,
  Abelian,
  Dihedral,
  Quaternion,
  Symmetric,
  Alternating,
  SL2,
  Heisenberg,
  Frobenius,
  Product,
};

// A builtin group request: family plus integer parameters, or a product of
// builtins. Dihedral and quaternion parameters are the group order (2n, 4n);
// Frobenius takes the order p*q.
struct BuiltinSpec {
  Family family = Family::Cyclic;
  std::vector<int> params;
  std::vector<BuiltinSpec> factors;
};

FiniteGroup cyclic_group(int n);
FiniteGroup abelian_group(const std::vector<int>& invariants);
FiniteGroup dihedral_group(int order);
FiniteGroup quaternion_group(int order);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup sl2_group(int q);
FiniteGroup heisenberg_group(int p);
FiniteGroup frobenius_group(int order);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Subgroup of Sym(degree) generated by the given permutations.
FiniteGroup permutation_group(std::string name, const std::vector<Perm>& gens);

FiniteGroup build_builtin(const BuiltinSpec& spec);

// Accepts names such as Z12, C5, D6, Q8, S4, A5, SL2(8), SL2_8, Heis3,
// Frob21, abelian(2,2) and products joined by 'x' (Z2xZ2, S3xZ3).
// Throws ValidationError for unknown families or unsupported parameters.
BuiltinSpec parse_group_name(std::string_view name);
FiniteGroup builtin_group(std::string_view name);

// Canonical display name of a spec (the name given to the built group).
std::string spec_name(const BuiltinSpec& spec);

// Builtins exercised by the batch checks, ascending by order.
std::vector<std::string> standard_catalog(std::size_t max_order = kMaxGroupOrder);

}  // namespace nilfilt
