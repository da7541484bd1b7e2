#include "nilfilt/chain.hpp"

#include <algorithm>

namespace nilfilt {

std::string space_name(Space s) { return s == Space::B ? "B" : "E"; }

std::size_t ChainComplex::index_of(int d, const Elem* t) const {
  if (d == 0) return 0;
  const auto& flat = tuples[d];
  const auto len = static_cast<std::size_t>(d);
  std::size_t lo = 0, hi = flat.size() / len;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(mid * len),
                                     flat.begin() + static_cast<std::ptrdiff_t>((mid + 1) * len), t, t + len))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < flat.size() / len && std::equal(t, t + len, flat.begin() + static_cast<std::ptrdiff_t>(lo * len)))
    return lo;
  return npos;
}

namespace {

// Faces of one simplex as (column, sign) pairs. For B the simplex is the
// tuple t; for E it is (a, t) and face 0 absorbs x_1 into a.
void faces(const ChainComplex& c, int d, Elem a, const Elem* t, std::vector<std::pair<std::size_t, long long>>& out,
           std::vector<Elem>& scratch) {
  const auto& g = *c.group;
  const bool e_space = c.space == Space::E;
  const std::size_t below = c.tuple_count(d - 1);
  out.clear();
  auto emit = [&](Elem base, long long sign) {
    const std::size_t idx = c.index_of(d - 1, scratch.data());
    if (idx == ChainComplex::npos) throw InternalError("face of an admissible tuple is not admissible");
    out.push_back({e_space ? base * below + idx : idx, sign});
  };
  for (int i = 0; i <= d; ++i) {
    const long long sign = i % 2 == 0 ? 1 : -1;
    scratch.clear();
    Elem base = a;
    bool degenerate = false;
    if (i == 0) {
      if (e_space) base = g.mul(a, t[0]);
      scratch.assign(t + 1, t + d);
    } else if (i == d) {
      scratch.assign(t, t + d - 1);
    } else {
      scratch.assign(t, t + d);
      const Elem m = g.mul(t[i - 1], t[i]);
      if (m == FiniteGroup::kIdentity) degenerate = true;
      scratch[static_cast<std::size_t>(i - 1)] = m;
      scratch.erase(scratch.begin() + i);
    }
    if (!degenerate) emit(base, sign);
  }
}

}  // namespace

ChainComplex build_chain_complex(const FiniteGroup& g, int q, Space space, int dmax, Variant v,
                                 std::size_t max_basis) {
  validate_bound(q, v);
  if (dmax < 0) throw ValidationError("dmax must be nonnegative");
  ChainComplex c;
  c.group = &g;
  c.q = q;
  c.variant = v;
  c.space = space;
  c.dmax = dmax;
  const std::size_t factor = space == Space::E ? g.order() : 1;

  std::size_t total = 0;
  for (int d = 0; d <= dmax; ++d) {
    const Count mu = d == 0 ? 1 : mu_count(g, d, q, v);
    if (mu > max_basis || mu * factor > max_basis || total + mu * factor > max_basis)
      throw GuardExceeded("chain complex basis through degree " + std::to_string(d) + " exceeds " +
                          std::to_string(max_basis));
    total += mu * factor;
  }

  c.tuples.resize(static_cast<std::size_t>(dmax) + 1);
  for (int d = 1; d <= dmax; ++d) c.tuples[d] = identity_free_tuples(g, d, q, v, max_basis);
  for (int d = 0; d <= dmax; ++d) c.sizes.push_back(c.tuple_count(d) * factor);

  c.boundary.emplace_back(c.sizes[0], 0);
  std::vector<std::pair<std::size_t, long long>> row;
  std::vector<Elem> scratch;
  for (int d = 1; d <= dmax; ++d) {
    IntegerMatrix m(0, c.sizes[d - 1]);
    const std::size_t n = c.tuple_count(d);
    const auto len = static_cast<std::size_t>(d);
    for (Elem a = 0; a < factor; ++a)
      for (std::size_t t = 0; t < n; ++t) {
        faces(c, d, a, c.tuples[d].data() + t * len, row, scratch);
        m.append_row(row);
      }
    c.boundary.push_back(std::move(m));
  }

  for (int d = 2; d <= dmax; ++d)
    if (!(c.boundary[d] * c.boundary[d - 1]).is_zero())
      throw InternalError("boundary maps do not compose to zero in degree " + std::to_string(d));
  return c;
}

}  // namespace nilfilt
