#include <doctest.h>

#include <algorithm>
#include <map>

#include "nilfilt/catalog.hpp"
#include "nilfilt/homspace.hpp"
#include "nilfilt/nilposet.hpp"
#include "nilfilt/tc.hpp"
#include "oracles.hpp"

using namespace nilfilt;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const std::vector<Subgroup>& hs) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& h : hs) ++m[h.order()];
  return m;
}

oracle::ElemSet as_set(const Subgroup& h) { return {h.elements().begin(), h.elements().end()}; }

}  // namespace

TEST_CASE("Q8 family at q=2") {
  const auto fam = nil_family(builtin_group("Q8"), 2);
  const auto nontrivial = std::count_if(fam.members.begin(), fam.members.end(), [](const Subgroup& h) { return !h.is_trivial(); });
  // {1}, <-1>, <i>, <j>, <k>
  CHECK(fam.members.size() == 5);
  CHECK(nontrivial == 4);
  CHECK(fam.maximal.size() == 3);
  for (const auto& m : fam.maximal) CHECK(m.order() == 4);
}

TEST_CASE("nil families agree with an exhaustive subgroup scan") {
  for (const char* name : {"S4", "Q8", "D8", "D12", "Z2xZ2", "Heis3", "Frob21", "S3xZ3"}) {
    const auto g = builtin_group(name);
    const auto subs = oracle::all_subgroups(g);
    for (int q : {2, 3, kQInfinity}) {
      CAPTURE(name);
      CAPTURE(q);
      std::set<oracle::ElemSet> expected;
      for (const auto& s : subs) {
        const int c = oracle::nilpotency_class(g, s);
        if (q == kQInfinity || (c >= 0 && c < q)) expected.insert(s);
      }
      std::set<oracle::ElemSet> got;
      for (const auto& h : nil_family(g, q).members) got.insert(as_set(h));
      CHECK(got == expected);
      std::set<oracle::ElemSet> got_max, want_max;
      for (const auto& h : maximal_nil_subgroups(g, q)) got_max.insert(as_set(h));
      for (const auto& s : expected)
        if (std::none_of(expected.begin(), expected.end(), [&](const auto& t) {
              return t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end());
            }))
          want_max.insert(s);
      CHECK(got_max == want_max);
    }
  }
}

TEST_CASE("abelian groups are their own family") {
  const auto g = builtin_group("Z2xZ2");
  CHECK(nil_family(g, 2).members.size() == oracle::all_subgroups(g).size());
  const auto m = maximal_nil_subgroups(builtin_group("Z12"), 2);
  REQUIRE(m.size() == 1);
  CHECK(m.front().order() == 12);
  CHECK_THROWS_AS(nil_family(builtin_group("SL2(8)"), 2), GuardExceeded);
}

TEST_CASE("maximal abelian subgroups of A5 and SL2(8)") {
  CHECK(order_histogram(maximal_nil_subgroups(builtin_group("A5"), 2)) ==
        std::map<std::size_t, std::size_t>{{3, 10}, {4, 5}, {5, 6}});
  CHECK(order_histogram(maximal_nil_subgroups(builtin_group("SL2(8)"), 2)) ==
        std::map<std::size_t, std::size_t>{{7, 36}, {8, 9}, {9, 28}});
}

TEST_CASE("S4 at q=3") {
  const auto s4 = builtin_group("S4");
  const auto maxes = maximal_nil_subgroups(s4, 3);
  CHECK(order_histogram(maxes) == std::map<std::size_t, std::size_t>{{3, 4}, {8, 3}});
  std::vector<Subgroup> d8s;
  for (const auto& m : maxes)
    if (m.order() == 8) d8s.push_back(m);
  REQUIRE(d8s.size() == 3);
  const auto k = d8s[0].set() & d8s[1].set();
  CHECK(k.count() == 4);
  CHECK((d8s[0].set() & d8s[2].set()) == k);
  CHECK((d8s[1].set() & d8s[2].set()) == k);
  const auto gg = poset_graph(s4, 3);
  CHECK(gg.is_tree);
  CHECK(gg.maximal.size() == 7);
}

TEST_CASE("poset graphs") {
  const auto q8 = poset_graph(builtin_group("Q8"), 2);
  CHECK(q8.is_tree);
  CHECK(q8.vertices.size() == 4);
  CHECK(q8.hasse.size() == 3);
  for (const auto& [lo, hi] : q8.hasse) {
    CHECK(q8.vertices[lo].order() == 2);
    CHECK(q8.vertices[hi].order() == 4);
  }
  const auto ab = poset_graph(builtin_group("Z12"), 2);
  CHECK(ab.vertices.size() == 1);
  CHECK(ab.is_tree);
  for (const char* name : {"D6", "D8", "D10", "D12", "D14", "D16", "Q16", "A5"}) {
    CAPTURE(name);
    CHECK(poset_graph(builtin_group(name), 2).is_tree);
  }
  const auto tsv = group_graph_tsv(q8);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') >= 3);
}

TEST_CASE("colimit presentations") {
  const auto q8 = colimit_presentation(builtin_group("Q8"), 2);
  CHECK(q8.surjects);
  CHECK(q8.abelianization == AbelianGroup{0, {2, 2, 4}});
  CHECK(presentation_text(q8).rfind("gens:", 0) == 0);

  for (const char* name : {"Z12", "Z2xZ2", "Z3xZ9"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto p = colimit_presentation(g, 2);
    CHECK(p.surjects);
    CHECK(p.abelianization == abelian_invariants(Subgroup::whole(g)));
  }

  const auto s4 = colimit_presentation(builtin_group("S4"), 3);
  CHECK(s4.surjects);
  CHECK(s4.abelianization == AbelianGroup{0, {3, 6, 6, 6}});
}

TEST_CASE("TC detection") {
  for (const char* name : {"D6", "D8", "D10", "D12", "D14", "D16", "Q8", "Q16", "A5", "SL2(8)", "Heis3", "Frob21"}) {
    CAPTURE(name);
    CHECK(is_tc(builtin_group(name)).is_tc);
  }
  const auto s4 = builtin_group("S4");
  const auto chk = is_tc(s4);
  CHECK_FALSE(chk.is_tc);
  REQUIRE(chk.witness);
  const Elem w = *chk.witness;
  CHECK_FALSE(center(s4).contains(w));
  const std::vector<Elem> ws{w};
  CHECK_FALSE(centralizer(s4, ws).is_abelian());
  CHECK(is_tc(builtin_group("Z12")).is_tc);
  CHECK_FALSE(is_tc(builtin_group("Z12")).note.empty());
}

TEST_CASE("the four TC conditions agree on the catalog") {
  for (const auto& name : standard_catalog(60)) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const bool a = tc_condition_a(g);
    CHECK(tc_condition_b(g) == a);
    CHECK(tc_condition_c(g) == a);
    CHECK(tc_condition_d(g) == a);
    CHECK(is_tc(g).is_tc == a);
  }
}

TEST_CASE("centralizer covers") {
  CHECK(centralizer_cover(builtin_group("A5")).subgroups.size() == 21);
  CHECK(centralizer_cover(builtin_group("Q8")).subgroups.size() == 3);
  const auto d6 = centralizer_cover(builtin_group("D6"));
  CHECK(order_histogram(d6.subgroups) == std::map<std::size_t, std::size_t>{{2, 3}, {3, 1}});
  CHECK_THROWS_AS(centralizer_cover(builtin_group("S4")), ValidationError);

  for (const char* name : {"D8", "Q16", "A5", "Heis3", "Frob21", "D12"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto cover = centralizer_cover(g);
    const auto z = center(g);
    ElementSet all = g.empty_set();
    for (std::size_t i = 0; i < cover.subgroups.size(); ++i) {
      all |= cover.subgroups[i].set();
      for (std::size_t j = i + 1; j < cover.subgroups.size(); ++j)
        CHECK((cover.subgroups[i].set() & cover.subgroups[j].set()) == z.set());
    }
    CHECK(all == g.all_elements());
    // the cover is the family of maximal abelian subgroups
    CHECK(cover.subgroups == maximal_nil_subgroups(g, 2));
  }
}

TEST_CASE("rank of the free fundamental group") {
  const std::vector<std::pair<const char*, long long>> cases = {
      {"D6", 8}, {"D8", 3}, {"D10", 24}, {"D12", 8}, {"D14", 48}, {"D16", 15}, {"Q8", 3}, {"A5", 854}};
  for (const auto& [name, n] : cases) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto r = tc_invariants(g);
    CHECK(r.n_g == n);
    CHECK(r.n_g == 1 - (r.chi * static_cast<long long>(g.order())).numerator());
    CHECK((r.chi * static_cast<long long>(g.order())).denominator() == 1);
  }
  CHECK(tc_invariants(builtin_group("Z6")).n_g == 0);
  CHECK_THROWS_AS(tc_invariants(builtin_group("S4")), ValidationError);
}

TEST_CASE("wedge terms for trivial center") {
  const auto a5 = tc_invariants(builtin_group("A5"));
  REQUIRE(a5.wedge.size() == 3);
  for (const auto& t : a5.wedge) {
    if (t.prime == 2) CHECK((t.multiplicity == 5 && t.sylow == AbelianGroup{0, {2, 2}}));
    if (t.prime == 3) CHECK((t.multiplicity == 10 && t.sylow == AbelianGroup{0, {3}}));
    if (t.prime == 5) CHECK((t.multiplicity == 6 && t.sylow == AbelianGroup{0, {5}}));
  }
  CHECK(tc_invariants(builtin_group("Q8")).wedge.empty());
}

TEST_CASE("counting splits over the centralizer cover when the center is trivial") {
  for (const char* name : {"D6", "D10", "A5", "Frob21", "SL2(8)"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto cover = centralizer_cover(g);
    for (int n = 1; n <= 3; ++n) {
      Count sum = 1;
      for (const auto& c : cover.subgroups) {
        CountOptions opt;
        opt.within = &c;
        sum += count_hom(g, n, 2, {}, opt) - 1;
      }
      CHECK(count_hom(g, n, 2) == sum);
    }
  }
  // with a nontrivial center the naive sum overcounts tuples inside the center
  const auto q8 = builtin_group("Q8");
  Count sum = 1;
  for (const auto& c : centralizer_cover(q8).subgroups) {
    CountOptions opt;
    opt.within = &c;
    sum += count_hom(q8, 2, 2, {}, opt) - 1;
  }
  CHECK(sum == 46);
  CHECK(count_hom(q8, 2, 2) == 40);
}

TEST_CASE("character of the first homology") {
  const auto g = builtin_group("D6");
  const auto chi = character_M2(g);
  REQUIRE(chi.values.size() == 3);
  // irreducibles of S3 evaluated by element order: trivial, sign, 2-dimensional
  auto irr = [&](int which, Elem rep) -> long long {
    const auto o = g.element_order(rep);
    if (which == 0) return 1;
    if (which == 1) return o == 2 ? -1 : 1;
    return o == 1 ? 2 : (o == 3 ? -1 : 0);
  };
  std::vector<long long> mult(3, 0);
  for (int w = 0; w < 3; ++w) {
    long long s = 0;
    for (std::size_t c = 0; c < chi.values.size(); ++c)
      s += static_cast<long long>(chi.classes.classes[c].size()) * chi.values[c] * irr(w, chi.classes.representatives[c]);
    CHECK(s % 6 == 0);
    mult[w] = s / 6;
  }
  CHECK(mult == std::vector<long long>{0, 2, 3});
  CHECK(chi.values[chi.classes.class_of[0]] == 8);

  for (const char* name : {"D6", "Q8", "A5", "D8", "Frob21"}) {
    CAPTURE(name);
    const auto h = builtin_group(name);
    const auto c = character_M2(h);
    CHECK(c.values[c.classes.class_of[0]] == tc_invariants(h).n_g);
    CHECK(c.kernel == center(h).elements());
  }
}
