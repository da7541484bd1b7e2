#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilfilt/catalog.hpp"
#include "nilfilt/homspace.hpp"
#include "nilfilt/subgroup.hpp"

using namespace nilfilt;

namespace {

Count binom(int n, int k) {
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<Count>(n - k + i) / static_cast<Count>(i);
  return r;
}

}  // namespace

TEST_CASE("binomial identity across the catalog") {
  for (const auto& name : standard_catalog(60)) {
    const auto g = builtin_group(name);
    for (int q : {2, 3})
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(n);
        Count sum = 1;
        for (int k = 1; k <= n; ++k) sum += binom(n, k) * mu_count(g, k, q);
        CHECK(count_hom(g, n, q) == sum);
      }
  }
}

TEST_CASE("filtration counts decompose by identity positions") {
  for (const char* name : {"S4", "Q8", "A5", "Heis3"}) {
    const auto g = builtin_group(name);
    for (int n = 1; n <= 3; ++n)
      for (int j = 0; j <= n; ++j) {
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(j);
        Count sum = 0;
        for (int t = j; t <= n; ++t) sum += binom(n, t) * (t == n ? 1 : mu_count(g, n - t, 2));
        CHECK(filtration_count(g, n, j, 2) == sum);
      }
    CHECK(mu_count(g, 3, 2) == count_hom(g, 3, 2) - filtration_count(g, 3, 1, 2));
  }
}

TEST_CASE("counts grow with q and stabilize") {
  for (const auto& name : standard_catalog(32)) {
    const auto g = builtin_group(name);
    const int n0 = stabilization_exponent(g);
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      Count prev = count_hom(g, n, 2);
      for (int q = 3; q <= std::max(n0 + 1, 4); ++q) {
        const Count cur = count_hom(g, n, q);
        CHECK(prev <= cur);
        if (q > n0) CHECK(prev == cur);
        prev = cur;
      }
    }
  }
}

TEST_CASE("q=2 admissibility is pairwise commutation") {
  for (const auto& name : standard_catalog(24)) {
    const auto g = builtin_group(name);
    CAPTURE(name);
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) CHECK(is_hom_tuple(g, std::vector<Elem>{x, y}, 2) == g.commute(x, y));
    std::mt19937 rng(static_cast<unsigned>(g.order()));
    for (int t = 0; t < 300; ++t) {
      const std::vector<Elem> v{static_cast<Elem>(rng() % g.order()), static_cast<Elem>(rng() % g.order()),
                                static_cast<Elem>(rng() % g.order())};
      const bool pairwise = g.commute(v[0], v[1]) && g.commute(v[1], v[2]) && g.commute(v[0], v[2]);
      CHECK(is_hom_tuple(g, v, 2) == pairwise);
    }
  }
}

TEST_CASE("admissibility is invariant under permutation and conjugation") {
  std::mt19937 rng(17);
  for (const char* name : {"S4", "Q16", "D16", "Heis3", "A5"}) {
    const auto g = builtin_group(name);
    CAPTURE(name);
    for (int t = 0; t < 200; ++t) {
      std::vector<Elem> v(3);
      for (auto& x : v) x = static_cast<Elem>(rng() % g.order());
      const Elem c = static_cast<Elem>(rng() % g.order());
      for (int q : {2, 3}) {
        const bool base = is_hom_tuple(g, v, q);
        auto w = v;
        std::shuffle(w.begin(), w.end(), rng);
        CHECK(is_hom_tuple(g, w, q) == base);
        for (auto& x : w) x = g.conjugate(x, c);
        CHECK(is_hom_tuple(g, w, q) == base);
      }
    }
  }
}

TEST_CASE("abelian groups count every tuple") {
  for (const char* name : {"Z12", "Z2xZ2", "Z3xZ9", "abelian(2,6)"}) {
    const auto g = builtin_group(name);
    for (int n = 1; n <= 3; ++n) {
      Count all = 1, free = 1;
      for (int i = 0; i < n; ++i) {
        all *= g.order();
        free *= g.order() - 1;
      }
      CHECK(count_hom(g, n, 2) == all);
      CHECK(mu_count(g, n, 2) == free);
      CHECK(rep_orbit_count(g, n, 2) == all);
    }
  }
}
