#include <doctest.h>

#include <algorithm>

#include "nilfilt/catalog.hpp"
#include "nilfilt/homspace.hpp"
#include "oracles.hpp"

using namespace nilfilt;

namespace {

Elem by_label(const FiniteGroup& g, const std::string& s) {
  const Elem x = g.find_label(s);
  REQUIRE(x < g.order());
  return x;
}

Count ipow(Count b, int e) {
  Count r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("admissibility of explicit tuples") {
  const auto s3 = builtin_group("S3");
  const std::vector<Elem> t{by_label(s3, "(1,2)"), by_label(s3, "(1,3)")};
  CHECK_FALSE(is_hom_tuple(s3, t, 2));
  CHECK(is_hom_tuple(s3, t, kQInfinity));

  const auto q8 = builtin_group("Q8");
  const Elem i = by_label(q8, "a"), j = by_label(q8, "b"), m = by_label(q8, "a^2");
  CHECK(is_hom_tuple(q8, std::vector<Elem>{i, j}, 3));
  CHECK_FALSE(is_hom_tuple(q8, std::vector<Elem>{i, j}, 2));
  CHECK(is_hom_tuple(q8, std::vector<Elem>{i, m}, 2));
  CHECK(is_hom_tuple(q8, std::vector<Elem>{}, 2));
  CHECK_THROWS_AS(is_hom_tuple(q8, std::vector<Elem>{8}, 2), ValidationError);
}

TEST_CASE("count examples") {
  CHECK(count_hom(builtin_group("Z2xZ2"), 3, 2) == 64);
  CHECK(count_hom(builtin_group("Q8"), 2, 2) == 40);
  for (const char* name : {"S4", "A5", "Q8", "Heis3"}) CHECK(count_hom(builtin_group(name), 1, 2) == builtin_group(name).order());
  CHECK(count_hom(builtin_group("A5"), 0, 2) == 1);
  CHECK(filtration_count(builtin_group("Q8"), 2, 1, 2) == 15);
  CHECK(filtration_count(builtin_group("A5"), 2, 1, 2) == 119);
  CHECK(filtration_count(builtin_group("S4"), 3, 3, 2) == 1);
  CHECK(filtration_count(builtin_group("S4"), 3, 0, 2) == count_hom(builtin_group("S4"), 3, 2));
  CHECK(mu_count(builtin_group("A5"), 2, 2) == 181);
  CHECK(mu_count(builtin_group("Q8"), 2, 2) == 25);
  for (int k = 1; k <= 4; ++k) CHECK(mu_count(builtin_group("Z12"), k, 2) == ipow(11, k));
}

TEST_CASE("A5 identity-free counts follow the Sylow formula") {
  const auto a5 = builtin_group("A5");
  for (int k = 1; k <= 4; ++k) CHECK(mu_count(a5, k, 2) == 5 * ipow(3, k) + 10 * ipow(2, k) + 6 * ipow(4, k));
}

TEST_CASE("counts agree with exhaustive enumeration") {
  for (const char* name : {"S3", "Q8", "D8", "Z2xZ2", "D10", "Z6"}) {
    const auto g = builtin_group(name);
    for (int q : {2, 3, kQInfinity})
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(name);
        CAPTURE(q);
        CAPTURE(n);
        CHECK(count_hom(g, n, q) == oracle::count_tuples(g, n, q));
        CHECK(mu_count(g, n, q) == oracle::count_tuples(g, n, q, 0, 0, true));
        for (int j = 0; j <= n; ++j) CHECK(filtration_count(g, n, j, q) == oracle::count_tuples(g, n, q, 0, j));
      }
  }
  const auto s4 = builtin_group("S4");
  for (int q : {2, 3}) {
    CHECK(count_hom(s4, 3, q) == oracle::count_tuples(s4, 3, q));
    CHECK(mu_count(s4, 3, q) == oracle::count_tuples(s4, 3, q, 0, 0, true));
  }
}

TEST_CASE("p-local counts agree with exhaustive enumeration") {
  for (const char* name : {"S3", "Q8", "Z2xZ2", "Z4", "D8", "Z6", "Heis3"}) {
    const auto g = builtin_group(name);
    for (int p : {2, 3})
      for (int q : {2, 3})
        for (int n = 1; n <= (g.order() > 12 ? 2 : 3); ++n) {
          CAPTURE(name);
          CAPTURE(p);
          CAPTURE(q);
          CAPTURE(n);
          CHECK(count_hom(g, n, q, Variant::p_local(p)) == oracle::count_tuples(g, n, q, p));
        }
  }
}

TEST_CASE("p-local q=2 tuples generate elementary abelian p-groups") {
  const auto g = builtin_group("D8");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const bool elem_ab = g.commute(x, y) && g.pow(x, 2) == 0 && g.pow(y, 2) == 0;
      CHECK(is_hom_tuple(g, std::vector<Elem>{x, y}, 2, Variant::p_local(2)) == elem_ab);
    }
}

TEST_CASE("invalid bounds") {
  const auto g = builtin_group("S3");
  CHECK_THROWS_AS(count_hom(g, 2, 1), ValidationError);
  CHECK_THROWS_AS(count_hom(g, 2, 0), ValidationError);
  CHECK_THROWS_AS(count_hom(g, 2, 2, Variant::p_local(4)), ValidationError);
  CHECK_THROWS_AS(count_hom(g, -1, 2), ValidationError);
  CHECK_THROWS_AS(filtration_count(g, 2, 3, 2), ValidationError);
  CHECK_THROWS_AS(count_hom(builtin_group("SL2(8)"), 8, 2), GuardExceeded);
  CHECK(q_name(kQInfinity) == "inf");
  CHECK(variant_name(Variant::p_local(3)) == "p-local(3)");
  CHECK(variant_name(Variant::ordinary()) == "ordinary");
}

TEST_CASE("stabilization exponent") {
  CHECK(stabilization_exponent(builtin_group("Z12")) == 2);
  CHECK(stabilization_exponent(builtin_group("S4")) == 3);
  CHECK(stabilization_exponent(builtin_group("Q8")) == 3);
  CHECK(stabilization_exponent(builtin_group("D16")) == 4);
  CHECK(stabilization_exponent(builtin_group("A5")) == 2);
  for (const char* name : {"S4", "Q8", "D16", "Heis3"}) {
    const auto g = builtin_group(name);
    const int n0 = stabilization_exponent(g);
    CHECK(count_hom(g, 2, n0 - 1) <= count_hom(g, 2, n0));
    CHECK(count_hom(g, 2, n0 + 3) == count_hom(g, 2, n0));
  }
}

TEST_CASE("conjugation orbits") {
  CHECK(rep_orbit_count(builtin_group("S3"), 1, 2) == 3);
  CHECK(rep_orbit_count(builtin_group("Z2xZ2"), 3, 2) == 64);
  CHECK(rep_orbit_count(builtin_group("Q8"), 2, 2) == 22);
  for (const char* name : {"Q8", "S3", "D8", "S4"})
    for (int q : {2, 3}) {
      CAPTURE(name);
      CAPTURE(q);
      const auto g = builtin_group(name);
      CHECK(rep_orbit_count(g, 2, q) == oracle::orbit_count(g, 2, q));
    }
}

TEST_CASE("parallel counting is deterministic") {
  const auto g = builtin_group("SL2(8)");
  CountOptions par;
  par.jobs = 4;
  CHECK(count_hom(g, 3, 2, {}, par) == count_hom(g, 3, 2));
  CHECK(mu_count(g, 3, 2, {}, par) == mu_count(g, 3, 2));
  const auto s4 = builtin_group("S4");
  CHECK(filtration_count(s4, 4, 2, 3, {}, par) == filtration_count(s4, 4, 2, 3));
}

TEST_CASE("counting inside a subgroup") {
  const auto s4 = builtin_group("S4");
  const auto d8 = sylow_subgroups(s4, 2).front();
  CountOptions opt;
  opt.within = &d8;
  CHECK(count_hom(s4, 2, 2, {}, opt) == count_hom(builtin_group("D8"), 2, 2));
  CHECK(count_hom(s4, 1, 2, {}, opt) == 8);
}

TEST_CASE("identity-free tuples are listed in order") {
  const auto q8 = builtin_group("Q8");
  const auto flat = identity_free_tuples(q8, 2, 2, {}, 1000);
  REQUIRE(flat.size() == 2 * 25);
  std::vector<std::vector<Elem>> tuples;
  for (std::size_t i = 0; i < flat.size(); i += 2) tuples.push_back({flat[i], flat[i + 1]});
  CHECK(std::is_sorted(tuples.begin(), tuples.end()));
  CHECK(std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end());
  for (const auto& t : tuples) {
    CHECK(t[0] != 0);
    CHECK(t[1] != 0);
    CHECK(q8.commute(t[0], t[1]));
  }
  CHECK_THROWS_AS(identity_free_tuples(q8, 4, 2, {}, 100), GuardExceeded);
}

TEST_CASE("count reports") {
  const auto r = count_report(builtin_group("Q8"), 2, {}, 3);
  CHECK(r.lambda.at(2) == 40);
  CHECK(r.mu.at(2) == 25);
  CHECK(r.s_counts.at({2, 1}) == 15);
  CHECK(r.stabilization == 3);
  const auto tsv = count_report_tsv(r);
  CHECK(tsv.rfind("group\tq\tvariant\tn_or_k\tquantity\tvalue\n", 0) == 0);
  CHECK(tsv.find("Q8\t2\tordinary\t2\tlambda\t40\n") != std::string::npos);
  CHECK(tsv.find("Q8\t2\tordinary\t2\tmu\t25\n") != std::string::npos);
}
