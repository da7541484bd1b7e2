#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "nilfilt/catalog.hpp"
#include "nilfilt/group_io.hpp"
#include "nilfilt/smith.hpp"
#include "nilfilt/subgroup.hpp"
#include "oracles.hpp"

using namespace nilfilt;

namespace {

oracle::ElemSet as_set(const Subgroup& h) { return {h.elements().begin(), h.elements().end()}; }

Elem by_label(const FiniteGroup& g, const std::string& s) {
  const Elem x = g.find_label(s);
  REQUIRE(x < g.order());
  return x;
}

}  // namespace

TEST_CASE("builtin orders") {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"Z12", 12}, {"C5", 5},       {"D6", 6},       {"D16", 16},     {"Q8", 8},
      {"Q16", 16}, {"S4", 24},      {"A5", 60},      {"SL2(4)", 60},  {"SL2(8)", 504},
      {"SL2_5", 120}, {"Heis3", 27}, {"Frob21", 21}, {"abelian(2,2)", 4}, {"Z2xZ2", 4},
      {"S3xZ3", 18}, {"Z3xZ9", 27}};
  for (const auto& [name, order] : cases) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    CHECK(g.order() == order);
    CHECK(g.identity() == 0);
  }
}

TEST_CASE("unknown or unsupported builtins are rejected") {
  for (const char* bad : {"Foo7", "D7", "Q6", "Z0", "SL2(6)", "Frob15", "", "S20", "Heis4"}) {
    CAPTURE(bad);
    CHECK_THROWS(builtin_group(bad));
  }
  CHECK_THROWS_AS(builtin_group("Z2000"), ValidationError);
  // S8 is far past the order cap
  const std::vector<Perm> s8{Perm::from_cycles(8, {{1, 2}}), Perm::from_cycles(8, {{1, 2, 3, 4, 5, 6, 7, 8}})};
  CHECK_THROWS_AS(permutation_group("S8", s8), GuardExceeded);
}

TEST_CASE("isomorphic builtins") {
  CHECK(oracle::isomorphic(builtin_group("A5"), builtin_group("SL2(4)")));
  CHECK(oracle::isomorphic(builtin_group("D6"), builtin_group("S3")));
  CHECK(oracle::isomorphic(builtin_group("Z2xZ2"), builtin_group("abelian(2,2)")));
  CHECK(oracle::isomorphic(builtin_group("Z6"), builtin_group("Z2xZ3")));
  CHECK_FALSE(oracle::isomorphic(builtin_group("Q8"), builtin_group("D8")));
  CHECK_FALSE(oracle::isomorphic(builtin_group("Z4"), builtin_group("Z2xZ2")));
}

TEST_CASE("from_table validates its input") {
  CHECK_NOTHROW(FiniteGroup::from_table("Z2", {{0, 1}, {1, 0}}));
  // identity not at 0
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{1, 0}, {0, 1}}), ValidationError);
  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), ValidationError);
  // ragged
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1}, {1}}), ValidationError);
  // entry out of range
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1}, {1, 2}}), ValidationError);
  // Latin square with identity 0 that is not associative
  const std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table("loop", loop), ValidationError);
}

TEST_CASE("element arithmetic") {
  const auto q8 = builtin_group("Q8");
  const Elem a = by_label(q8, "a"), b = by_label(q8, "b"), m = by_label(q8, "a^2");
  CHECK(q8.element_order(a) == 4);
  CHECK(q8.mul(a, a) == m);
  CHECK(q8.mul(b, b) == m);
  CHECK(q8.pow(a, 4) == 0);
  CHECK(q8.pow(a, -1) == q8.inv(a));
  CHECK(q8.commutator(a, b) == m);
  CHECK_FALSE(q8.is_abelian());
  for (Elem x = 0; x < q8.order(); ++x) CHECK(q8.mul(x, q8.inv(x)) == 0);
}

TEST_CASE("closures match the brute-force oracle") {
  for (const char* name : {"S4", "Q16", "Heis3", "Frob21", "D12"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    for (Elem x = 0; x < g.order(); x += 3)
      for (Elem y = 1; y < g.order(); y += 5) {
        const std::vector<Elem> gens{x, y};
        CHECK(as_set(Subgroup::generated(g, gens)) == oracle::closure(g, gens));
      }
  }
}

TEST_CASE("join adjoins one element") {
  const auto s4 = builtin_group("S4");
  const auto h = Subgroup::generated(s4, std::vector<Elem>{by_label(s4, "(1,2)")});
  const auto j = join(h, by_label(s4, "(3,4)"));
  CHECK(j.order() == 4);
  CHECK(join(j, by_label(s4, "(1,3)(2,4)")).order() == 8);
  CHECK(join(j, by_label(s4, "(1,3)")).order() == 24);
  CHECK(join(h, by_label(s4, "(1,2,3,4)")) == Subgroup::whole(s4));
}

TEST_CASE("commutator subgroups match the oracle") {
  for (const char* name : {"S4", "A5", "Q8", "D16", "Heis3"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto whole = Subgroup::whole(g);
    const auto all = as_set(whole);
    CHECK(as_set(commutator_subgroup(whole, whole)) == oracle::commutator_set(g, all, all));
  }
  const auto s4 = builtin_group("S4");
  CHECK(commutator_subgroup(Subgroup::whole(s4), Subgroup::whole(s4)).order() == 12);
}

TEST_CASE("central series and class bounds") {
  struct Case {
    const char* name;
    int cls;  // -1: not nilpotent
  };
  for (auto [name, cls] : std::vector<Case>{{"Z12", 1}, {"Q8", 2}, {"D8", 2}, {"D16", 3}, {"Q16", 3},
                                             {"Heis3", 2}, {"S3", -1}, {"A5", -1}, {"Frob21", -1}}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto rec = central_series(Subgroup::whole(g));
    CHECK(rec.nilpotency_class.value_or(-1) == cls);
    CHECK(oracle::nilpotency_class(g, as_set(Subgroup::whole(g))) == cls);
    for (int q = 2; q <= 5; ++q) CHECK(class_below(Subgroup::whole(g), q) == (cls >= 0 && cls < q));
    CHECK(class_below(Subgroup::whole(g), kQInfinity));
  }
}

TEST_CASE("p-central series") {
  const auto z4 = builtin_group("Z4");
  const auto rec = central_series(Subgroup::whole(z4), SeriesKind::p_lower_central(2));
  CHECK(rec.nilpotency_class == 2);
  CHECK(rec.terms.size() == 3);
  CHECK(oracle::p_class(z4, as_set(Subgroup::whole(z4)), 2) == 2);
  // A 3-group never has finite 2-class
  const auto z3 = builtin_group("Z3");
  CHECK_FALSE(central_series(Subgroup::whole(z3), SeriesKind::p_lower_central(2)).nilpotency_class);
  for (const char* name : {"Q8", "D8", "Z2xZ2", "Heis3", "Z9"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto h = Subgroup::whole(g);
    for (int p : {2, 3}) {
      const int c = oracle::p_class(g, as_set(h), p);
      CHECK(central_series(h, SeriesKind::p_lower_central(p)).nilpotency_class.value_or(-1) == c);
      for (int q = 2; q <= 4; ++q)
        CHECK(class_below(h, q, SeriesKind::p_lower_central(p)) == (c >= 0 && c < q));
    }
  }
}

TEST_CASE("centralizers, center and normalizers") {
  const auto d8 = builtin_group("D8");
  CHECK(center(d8).order() == 2);
  CHECK(center(builtin_group("A5")).is_trivial());
  CHECK(center(builtin_group("Z12")).order() == 12);
  CHECK(center(builtin_group("SL2(5)")).order() == 2);
  const auto s4 = builtin_group("S4");
  const std::vector<Elem> t{by_label(s4, "(1,2)")};
  CHECK(centralizer(s4, t).order() == 4);
  const auto h = Subgroup::generated(s4, t);
  CHECK(normalizer(h).order() == 4);
  CHECK_FALSE(h.is_normal());
  const auto v4 = Subgroup::generated(s4, std::vector<Elem>{by_label(s4, "(1,2)(3,4)"), by_label(s4, "(1,3)(2,4)")});
  CHECK(v4.is_normal());
  CHECK(normalizer(v4).order() == 24);
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const char* name) {
    std::vector<std::size_t> s;
    for (const auto& c : conjugacy_classes(builtin_group(name)).classes) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sizes("S4") == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(sizes("A5") == std::vector<std::size_t>{1, 12, 12, 15, 20});
  CHECK(sizes("Q8") == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(conjugacy_classes(builtin_group("SL2(8)")).classes.size() == 9);
  const auto cc = conjugacy_classes(builtin_group("D10"));
  for (std::size_t i = 0; i < cc.classes.size(); ++i) CHECK(cc.representatives[i] == cc.classes[i].front());
}

TEST_CASE("Sylow subgroups") {
  const auto s4 = builtin_group("S4");
  CHECK(sylow_subgroups(s4, 2).size() == 3);
  CHECK(sylow_subgroups(s4, 3).size() == 4);
  CHECK(sylow_subgroups(s4, 5).size() == 1);
  CHECK(sylow_subgroups(s4, 5).front().is_trivial());
  const auto a5 = builtin_group("A5");
  CHECK(sylow_subgroups(a5, 2).size() == 5);
  CHECK(sylow_subgroups(a5, 3).size() == 10);
  CHECK(sylow_subgroups(a5, 5).size() == 6);
  const auto sl = builtin_group("SL2(8)");
  CHECK(sylow_subgroups(sl, 2).size() == 9);
  CHECK(sylow_subgroups(sl, 3).size() == 28);
  CHECK(sylow_subgroups(sl, 7).size() == 36);
  for (const auto& p : sylow_subgroups(sl, 2)) CHECK(p.order() == 8);
  CHECK(p_part(504, 2) == 8);
  CHECK(p_part(504, 3) == 9);
  CHECK(p_part(504, 5) == 1);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("S4"))) == AbelianGroup{0, {2}});
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("A5"))).is_trivial());
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("Q8"))) == AbelianGroup{0, {2, 2}});
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("Heis3"))) == AbelianGroup{0, {3, 3}});
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("Frob21"))) == AbelianGroup{0, {3}});
  CHECK(abelian_invariants(Subgroup::whole(builtin_group("Z3xZ9"))) == AbelianGroup{0, {3, 9}});
}

TEST_CASE("abelian presentations are faithful") {
  for (const char* name : {"Z12", "Z3xZ9", "abelian(2,6)", "Z2xZ2"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto pres = abelian_presentation(Subgroup::whole(g));
    const auto gens = pres.generators;
    for (Elem x = 0; x < g.order(); ++x) {
      Elem y = 0;
      for (std::size_t c = 0; c < gens.size(); ++c) y = g.mul(y, g.pow(gens[c], pres.coords[x][c]));
      CHECK(y == x);
    }
    CHECK(cokernel_invariants(pres.relations).torsion_order() == g.order());
  }
}

TEST_CASE("group files round-trip byte-for-byte") {
  const auto dir = std::filesystem::temp_directory_path() / "nilfilt_group_io_test";
  std::filesystem::create_directories(dir);
  for (const char* name : {"Q8", "S4", "Frob21"}) {
    CAPTURE(name);
    const auto g = builtin_group(name);
    const auto path = dir / (std::string(name) + ".json");
    save_group_file(g, path);
    const auto back = load_group_file(path);
    CHECK(back == g);
    CHECK(group_to_json(back) == group_to_json(g));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("permutation generator files") {
  const auto g = group_from_json(R"({"name":"S3p","perm_gens":[[[1,2]],[[1,2,3]]]})");
  CHECK(g.order() == 6);
  CHECK(oracle::isomorphic(g, builtin_group("S3")));
}

TEST_CASE("mutated group files are rejected") {
  auto doc = nlohmann::json::parse(group_to_json(builtin_group("Q8")));
  SUBCASE("swapped entry") {
    std::swap(doc["mul"][1][2], doc["mul"][1][3]);
    CHECK_THROWS_AS(group_from_json(doc.dump()), ValidationError);
  }
  SUBCASE("wrong order") {
    doc["order"] = 9;
    CHECK_THROWS_AS(group_from_json(doc.dump()), ValidationError);
  }
  SUBCASE("missing table") {
    doc.erase("mul");
    CHECK_THROWS_AS(group_from_json(doc.dump()), ValidationError);
  }
  SUBCASE("label count mismatch") {
    doc["labels"].erase(0);
    CHECK_THROWS_AS(group_from_json(doc.dump()), ValidationError);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(group_from_json("{not json"), ValidationError); }
  CHECK_THROWS_AS(load_group_file("/nonexistent/dir/g.json"), IoError);
}
