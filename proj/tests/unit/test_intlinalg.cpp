#include <doctest.h>

#include <random>
#include <stdexcept>

#include "nilfilt/catalog.hpp"
#include "nilfilt/smith.hpp"
#include "nilfilt/subgroup.hpp"
#include "oracles.hpp"

using namespace nilfilt;

namespace {

std::vector<std::vector<long long>> random_dense(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

IntegerMatrix mat(const std::vector<std::vector<long long>>& a, std::size_t cols) {
  return IntegerMatrix::from_dense(a, cols);
}

std::vector<BigInt> as_big(const std::vector<long long>& v) { return {v.begin(), v.end()}; }

bool is_diagonal_chain(const SmithForm& s) {
  for (std::size_t i = 0; i < s.S.rows(); ++i)
    for (const auto& e : s.S.row(i))
      if (e.col != i || e.value < 0) return false;
  for (std::size_t i = 1; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] % s.diagonal[i - 1] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  const auto a = mat({{2, 0}, {0, 3}}, 2);
  const auto s = smith_normal_form(a);
  CHECK(s.S == mat({{1, 0}, {0, 6}}, 2));
  CHECK(s.U * a * s.V == s.S);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
}

TEST_CASE("smith normal form of a zero matrix") {
  const IntegerMatrix a(3, 4);
  const auto s = smith_normal_form(a);
  CHECK(s.S.is_zero());
  CHECK(s.U == IntegerMatrix::identity(3));
  CHECK(s.V == IntegerMatrix::identity(4));
  CHECK(s.diagonal.empty());
}

TEST_CASE("random 8x8 matrices agree with the textbook oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 250; ++t) {
    auto a = random_dense(rng, 8, 8, -9, 9);
    if (t % 5 == 0) a[6] = a[2];  // force rank deficiency now and then
    const auto m = IntegerMatrix::from_dense(a, 8);
    const auto s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.S);
    CHECK(is_diagonal_chain(s));
    CHECK(s.diagonal == as_big(oracle::naive_snf(a)));
    CHECK(invariant_factors(m) == s.diagonal);
  }
}

TEST_CASE("transforms are unimodular on rectangular inputs up to 50") {
  std::mt19937_64 rng(11);
  for (auto [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 9}, {12, 7}, {20, 30}, {50, 50}}) {
    const auto a = random_dense(rng, r, c, -3, 3);
    const auto m = IntegerMatrix::from_dense(a, c);
    const auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.S);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(is_diagonal_chain(s));
  }
}

TEST_CASE("sparse elimination agrees with the dense form") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto a = random_dense(rng, 30, 40, -1, 1);
    for (auto& row : a)
      for (auto& x : row)
        if (rng() % 3) x = 0;
    const auto m = IntegerMatrix::from_dense(a, 40);
    CHECK(invariant_factors(m) == smith_normal_form(m).diagonal);
    CHECK(invariant_factors(m) == as_big(oracle::naive_snf(a)));
  }
}

TEST_CASE("overflowing entries fall back to arbitrary precision") {
  const BigInt big = BigInt(1) << 40;
  const auto a = IntegerMatrix::from_dense(std::vector<std::vector<BigInt>>{{big, 1}, {0, big}}, 2);
  const auto f = invariant_factors(a);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == BigInt(BigInt(1) << 80));
  CHECK(determinant(a) == BigInt(BigInt(1) << 80));

  // a chain of doublings whose determinant leaves 64 bits
  IntegerMatrix chain(70, 70);
  for (std::size_t i = 0; i < 70; ++i) {
    chain.set(i, i, 2);
    if (i + 1 < 70) chain.set(i, i + 1, -1);
  }
  CHECK(determinant(chain) == BigInt(BigInt(1) << 70));
  const auto chain_factors = invariant_factors(chain);
  CHECK(chain_factors.back() == BigInt(BigInt(1) << 70));
  // a single cyclic factor of order 2^70 has no int64 representation
  CHECK_THROWS_AS(cokernel_invariants(chain), std::overflow_error);
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(mat({{2}}, 1)) == AbelianGroup{0, {2}});
  CHECK(cokernel_invariants(IntegerMatrix(0, 3)) == AbelianGroup{3, {}});
  // generators v, e1, e2, e3: 2v = 0, 4e_i = 0 and v = 2e_i (image of v_i)
  const auto q8 = mat({{2, 0, 0, 0},
                                             {0, 4, 0, 0},
                                             {0, 0, 4, 0},
                                             {0, 0, 0, 4},
                                             {1, 2, 0, 0},
                                             {1, 0, 2, 0},
                                             {1, 0, 0, 2}},
                                            4);
  CHECK(cokernel_invariants(q8) == AbelianGroup{0, {2, 2, 4}});

  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const auto a = random_dense(rng, r, c, -6, 6);
    const auto [rank, tors] = oracle::naive_cokernel(a, c);
    const auto got = cokernel_invariants(IntegerMatrix::from_dense(a, c));
    CHECK(got.rank == rank);
    CHECK(got.torsion == std::vector<std::int64_t>(tors.begin(), tors.end()));
  }
}

TEST_CASE("matrix rank") {
  CHECK(matrix_rank(mat({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(matrix_rank(IntegerMatrix(4, 4)) == 0);
  CHECK(matrix_rank(IntegerMatrix::identity(6)) == 6);
}

TEST_CASE("abelian group canonical form") {
  CHECK(AbelianGroup::from_cyclic_orders(0, std::vector<std::int64_t>{2, 3}).torsion == std::vector<std::int64_t>{6});
  CHECK(AbelianGroup::from_cyclic_orders(0, std::vector<std::int64_t>{4, 6}).torsion ==
        std::vector<std::int64_t>{2, 12});
  CHECK(AbelianGroup::from_cyclic_orders(1, std::vector<std::int64_t>{1, 0, 5}) == AbelianGroup{2, {5}});
  CHECK(AbelianGroup{0, {2, 4}}.to_string() == "Z/4+Z/2");
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK((AbelianGroup{0, {2}} + AbelianGroup{1, {3}}) == AbelianGroup{1, {6}});
  CHECK(AbelianGroup{0, {6, 30}}.torsion_primes() == std::vector<std::int64_t>{2, 3, 5});
}

TEST_CASE("abelian decomposition of subgroups") {
  const auto v4 = builtin_group("Z2xZ2");
  CHECK(abelian_decomposition(Subgroup::whole(v4)) == AbelianGroup{0, {2, 2}});
  const auto z12 = builtin_group("Z12");
  CHECK(abelian_decomposition(Subgroup::whole(z12)) == AbelianGroup{0, {12}});
  const auto sl = builtin_group("SL2(8)");
  const auto p3 = sylow_subgroups(sl, 3);
  CHECK(abelian_decomposition(p3.front()) == AbelianGroup{0, {9}});
  CHECK_THROWS_AS(abelian_decomposition(Subgroup::whole(builtin_group("Q8"))), ValidationError);
}
