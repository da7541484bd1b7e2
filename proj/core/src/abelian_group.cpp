#include "nilfilt/abelian_group.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace nilfilt {

std::vector<BigInt> normalize_divisibility_chain(std::vector<BigInt> values) {
  // Pairwise (gcd, lcm) replacement keeps the product and the cokernel of the
  // diagonal matrix; after the sweep values[i] | values[j] for i < j.
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == 0 || values[j] % values[i] == 0) continue;
      const BigInt g = boost::multiprecision::gcd(values[i], values[j]);
      const BigInt l = values[i] / g * values[j];
      values[i] = g;
      values[j] = l;
    }
  }
  return values;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t rank, const std::vector<BigInt>& orders) {
  AbelianGroup g;
  g.rank = rank;
  std::vector<BigInt> finite;
  for (const auto& o : orders) {
    if (o == 0) {
      ++g.rank;
    } else {
      BigInt a = o < 0 ? BigInt(-o) : o;
      if (a != 1) finite.push_back(a);
    }
  }
  for (const auto& d : normalize_divisibility_chain(std::move(finite))) {
    if (d == 1) continue;
    if (d > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("AbelianGroup: invariant factor exceeds 64 bits");
    g.torsion.push_back(static_cast<std::int64_t>(d));
  }
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t rank, const std::vector<std::int64_t>& orders) {
  std::vector<BigInt> big(orders.begin(), orders.end());
  return from_cyclic_orders(rank, big);
}

BigInt AbelianGroup::torsion_order() const {
  BigInt n = 1;
  for (auto d : torsion) n *= d;
  return n;
}

std::vector<std::int64_t> AbelianGroup::torsion_primes() const {
  std::vector<std::int64_t> ps;
  for (auto d : torsion)
    for (auto p : prime_factors(d)) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  // Largest factor first, the way the groups are usually written.
  for (auto it = torsion.rbegin(); it != torsion.rend(); ++it) {
    if (!first) os << "+";
    os << "Z/" << *it;
    first = false;
  }
  return os.str();
}

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::int64_t> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::from_cyclic_orders(a.rank + b.rank, orders);
}

}  // namespace nilfilt
