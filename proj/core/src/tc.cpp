#include "nilfilt/tc.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace nilfilt {

namespace {

struct Centralizers {
  Subgroup center;
  std::vector<ElementSet> of;  // per element
};

Centralizers all_centralizers(const FiniteGroup& g) {
  Centralizers c{center(g), {}};
  c.of.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    ElementSet s = g.empty_set();
    for (Elem y = 0; y < g.order(); ++y)
      if (g.commute(x, y)) s.insert(y);
    c.of.push_back(std::move(s));
  }
  return c;
}

bool set_is_abelian(const FiniteGroup& g, const ElementSet& s) {
  const auto v = s.to_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!g.commute(v[i], v[j])) return false;
  return true;
}

}  // namespace

TCCheck is_tc(const FiniteGroup& g) {
  TCCheck r;
  if (g.is_abelian()) {
    r.is_tc = true;
    r.note = "abelian group";
    return r;
  }
  const Subgroup z = center(g);
  for (Elem x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    const Elem s[] = {x};
    if (!centralizer(g, s).is_abelian()) {
      r.witness = x;
      r.note = "centralizer of " + g.label(x) + " is nonabelian";
      return r;
    }
  }
  r.is_tc = true;
  return r;
}

bool tc_condition_a(const FiniteGroup& g) {
  const auto c = all_centralizers(g);
  for (Elem x = 0; x < g.order(); ++x)
    if (!c.center.contains(x) && !set_is_abelian(g, c.of[x])) return false;
  return true;
}

bool tc_condition_b(const FiniteGroup& g) {
  const auto c = all_centralizers(g);
  for (Elem x = 0; x < g.order(); ++x) {
    if (c.center.contains(x)) continue;
    for (Elem y = x + 1; y < g.order(); ++y)
      if (!c.center.contains(y) && g.commute(x, y) && !(c.of[x] == c.of[y])) return false;
  }
  return true;
}

bool tc_condition_c(const FiniteGroup& g) {
  const Subgroup z = center(g);
  for (Elem h = 0; h < g.order(); ++h) {
    if (z.contains(h)) continue;
    std::vector<Elem> around;
    for (Elem x = 0; x < g.order(); ++x)
      if (g.commute(x, h)) around.push_back(x);
    for (auto a : around)
      for (auto b : around)
        if (!g.commute(a, b)) return false;
  }
  return true;
}

bool tc_condition_d(const FiniteGroup& g) {
  // Centralizers of subgroups are the intersections of element centralizers.
  const auto c = all_centralizers(g);
  std::unordered_set<ElementSet, ElementSetHash> seen(c.of.begin(), c.of.end());
  std::vector<ElementSet> family(seen.begin(), seen.end());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet m = family[i] & family[j];
      if (seen.insert(m).second) family.push_back(std::move(m));
    }
  const ElementSet& z = c.center.set();
  const ElementSet all = g.all_elements();
  std::vector<const ElementSet*> middle;
  for (const auto& s : family)
    if (!(s == z) && !(s == all) && z.is_subset_of(s)) middle.push_back(&s);
  for (auto a : middle)
    for (auto b : middle)
      if (a != b && a->is_subset_of(*b)) return false;
  return true;
}

CentralizerCover centralizer_cover(const FiniteGroup& g) {
  if (!is_tc(g).is_tc) throw ValidationError("centralizer_cover: " + g.name() + " is not a TC group");
  const Subgroup z = center(g);
  std::map<ElementSet, Elem, bool (*)(const ElementSet&, const ElementSet&)> reps(
      [](const ElementSet& a, const ElementSet& b) { return a.lex_less(b); });
  std::vector<Subgroup> subs;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    const Elem s[] = {x};
    Subgroup c = centralizer(g, s);
    if (seen.insert(c.set()).second) {
      reps.emplace(c.set(), x);
      subs.push_back(std::move(c));
    }
  }
  std::sort(subs.begin(), subs.end());
  CentralizerCover cover;
  for (auto& s : subs) {
    cover.representatives.push_back(reps.at(s.set()));
    cover.subgroups.push_back(std::move(s));
  }
  return cover;
}

TCReport tc_invariants(const FiniteGroup& g) {
  TCReport r;
  r.check = is_tc(g);
  if (!r.check.is_tc) throw ValidationError("tc_invariants: " + g.name() + " is not a TC group");
  const Subgroup z = center(g);
  r.center_order = z.order();
  const auto order = static_cast<long long>(g.order());
  const long long index_z = order / static_cast<long long>(z.order());
  if (z.order() == g.order()) {
    // Abelian: B(2,G) = BG and E(2,G) is contractible.
    r.k = 0;
    r.n_g = 0;
    r.chi = boost::rational<long long>(1, order);
  } else {
    r.cover = centralizer_cover(g);
    r.k = r.cover.subgroups.size();
    r.n_g = 1 - index_z;
    r.chi = boost::rational<long long>(1, static_cast<long long>(z.order()));
    for (const auto& c : r.cover.subgroups) {
      const auto co = static_cast<long long>(c.order());
      r.n_g += index_z - order / co;
      r.chi += boost::rational<long long>(1, co) - boost::rational<long long>(1, static_cast<long long>(z.order()));
    }
  }
  if (boost::rational<long long>(r.n_g) != 1 - r.chi * order)
    throw InternalError("tc_invariants: rank and Euler characteristic disagree");

  if (z.is_trivial()) {
    std::map<std::pair<int, std::string>, WedgeTerm> terms;
    for (const auto& c : r.cover.subgroups)
      for (auto p : prime_factors(static_cast<std::int64_t>(c.order()))) {
        ElementSet part = g.empty_set();
        for (auto x : c.elements())
          if (p_part(g.element_order(x), static_cast<int>(p)) == g.element_order(x)) part.insert(x);
        const AbelianGroup type = abelian_decomposition(Subgroup::from_elements(g, part));
        auto& t = terms[{static_cast<int>(p), type.to_string()}];
        t.prime = static_cast<int>(p);
        t.sylow = type;
        ++t.multiplicity;
      }
    for (auto& [key, t] : terms) r.wedge.push_back(t);
  }
  return r;
}

ClassFunction character_M2(const FiniteGroup& g) {
  const TCReport rep = tc_invariants(g);
  const Subgroup z = center(g);
  ClassFunction f;
  f.classes = conjugacy_classes(g);
  // Number of cosets xH fixed by g: |{x : x^-1 g x in H}| / |H|.
  auto fixed = [&](Elem e, const Subgroup& h) {
    long long n = 0;
    for (Elem x = 0; x < g.order(); ++x)
      if (h.contains(g.conjugate(e, x))) ++n;
    return n / static_cast<long long>(h.order());
  };
  const auto k = static_cast<long long>(rep.k);
  for (auto e : f.classes.representatives) {
    long long v = (k - 1) * fixed(e, z) + 1;
    for (const auto& c : rep.cover.subgroups) v -= fixed(e, c);
    f.values.push_back(v);
  }
  const long long at_one = f.values[f.classes.class_of[FiniteGroup::kIdentity]];
  for (Elem x = 0; x < g.order(); ++x)
    if (f.values[f.classes.class_of[x]] == at_one) f.kernel.push_back(x);
  return f;
}

}  // namespace nilfilt
