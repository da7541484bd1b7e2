#include "nilfilt/group.hpp"

#include <algorithm>

namespace nilfilt {

namespace {

// Light's test: for a Latin square with identity, (xy)s = x(ys) for all x, y
// and all s in a generating set implies associativity, since the set of such
// s is closed under products.
std::vector<Elem> magma_generators(const std::vector<Elem>& mul, std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<Elem> reached{0};
  seen[0] = 1;
  std::vector<Elem> gens;
  auto close = [&](std::size_t from) {
    for (std::size_t i = from; i < reached.size(); ++i) {
      // re-multiply every reached element by every generator
      for (auto g : gens) {
        Elem p = mul[reached[i] * n + g];
        if (!seen[p]) {
          seen[p] = 1;
          reached.push_back(p);
        }
      }
    }
  };
  for (Elem x = 1; x < n; ++x) {
    if (seen[x]) continue;
    gens.push_back(x);
    seen[x] = 1;
    reached.push_back(x);
    close(0);
  }
  return gens;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<Elem>>& table,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  auto fail = [&](const std::string& why) { throw ValidationError("group '" + name + "': " + why); };
  if (n == 0) fail("empty multiplication table");
  if (n > kMaxGroupOrder) throw GuardExceeded("group '" + name + "': order exceeds " + std::to_string(kMaxGroupOrder));
  if (!labels.empty() && labels.size() != n) fail("label count does not match order");

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail("row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) fail("entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      g.mul_[a * n + b] = table[a][b];
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul_[a] != a || g.mul_[a * n] != a) fail("id 0 is not a two-sided identity");

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[g.mul_[a * n + b]]++) fail("row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[g.mul_[b * n + a]]++) fail("column " + std::to_string(a) + " is not a permutation");
    }
  }

  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul_[a * n + b] == 0) {
        g.inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
    if (g.mul_[g.inv_[a] * n + a] != 0) fail("left and right inverses differ for " + std::to_string(a));
  }

  for (auto s : magma_generators(g.mul_, n)) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Elem xy = g.mul_[x * n + y];
        if (g.mul_[xy * n + s] != g.mul_[x * n + g.mul_[y * n + s]]) fail("multiplication is not associative");
      }
  }

  g.elem_order_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t k = 1;
    Elem p = static_cast<Elem>(a);
    while (p != 0) {
      p = g.mul_[p * n + a];
      ++k;
    }
    g.elem_order_[a] = k;
  }
  g.labels_ = std::move(labels);
  return g;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(elem_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  Elem r = kIdentity;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul_[a * order_ + b] != mul_[b * order_ + a]) return false;
  return true;
}

std::string FiniteGroup::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return "e" + std::to_string(a);
}

Elem FiniteGroup::find_label(const std::string& text) const {
  for (std::size_t a = 0; a < order_; ++a)
    if (label(static_cast<Elem>(a)) == text) return static_cast<Elem>(a);
  return static_cast<Elem>(order_);
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(order_);
  for (std::size_t a = 0; a < order_; ++a)
    t[a].assign(mul_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                mul_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  return t;
}

ElementSet FiniteGroup::all_elements() const {
  ElementSet s(order_);
  for (std::size_t a = 0; a < order_; ++a) s.insert(static_cast<Elem>(a));
  return s;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return name_ == other.name_ && mul_ == other.mul_ && labels_ == other.labels_;
}

}  // namespace nilfilt
