#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilfilt/subgroup.hpp"

namespace nilfilt {

using Count = std::uint64_t;

// Which descending series bounds the tuples: ordinary or p-local.
struct Variant {
  int prime = 0;

  static Variant ordinary() { return {}; }
  static Variant p_local(int p) { return {p}; }
  SeriesKind series() const { return SeriesKind{prime}; }
  bool operator==(const Variant&) const = default;
};

std::string variant_name(Variant v);
// "inf" for kQInfinity.
std::string q_name(int q);
// Throws ValidationError unless q >= 2 or q = inf, and p (if any) is prime.
void validate_bound(int q, Variant v);

struct CountOptions {
  unsigned jobs = 1;
  // Count inside this subgroup instead of the whole group.
  const Subgroup* within = nullptr;
};

bool is_hom_tuple(const FiniteGroup& g, std::span<const Elem> entries, int q, Variant v = {});

// lambda_n(q, G): admissible n-tuples. Throws GuardExceeded if |G|^n does not
// fit in 64 bits.
Count count_hom(const FiniteGroup& g, int n, int q, Variant v = {}, const CountOptions& opt = {});
// mu_k(q, G): admissible k-tuples with no identity entry.
Count mu_count(const FiniteGroup& g, int k, int q, Variant v = {}, const CountOptions& opt = {});
// |S_n(j, q, G)|: admissible n-tuples with at least j identity entries.
Count filtration_count(const FiniteGroup& g, int n, int j, int q, Variant v = {}, const CountOptions& opt = {});

// 1 + largest nilpotency class of a nilpotent subgroup (at least 2).
int stabilization_exponent(const FiniteGroup& g);

// Conjugation orbits on Hom(F_n/Gamma^q, G), by Burnside over classes.
Count rep_orbit_count(const FiniteGroup& g, int n, int q, Variant v = {}, const CountOptions& opt = {});

// All identity-free admissible k-tuples in lexicographic order, flattened
// (k entries per tuple). Throws GuardExceeded past max_tuples.
std::vector<Elem> identity_free_tuples(const FiniteGroup& g, int k, int q, Variant v, std::size_t max_tuples);

struct CountReport {
  std::string group;
  int q = 2;
  Variant variant;
  std::map<int, Count> lambda;
  std::map<int, Count> mu;
  std::map<std::pair<int, int>, Count> s_counts;  // (n, j)
  int stabilization = 2;
};

CountReport count_report(const FiniteGroup& g, int q, Variant v, int nmax, const CountOptions& opt = {});
// Columns: group, q, variant, n_or_k, quantity, value.
std::string count_report_tsv(const CountReport& r);

}  // namespace nilfilt
