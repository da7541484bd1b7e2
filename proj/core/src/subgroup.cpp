#include "nilfilt/subgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "nilfilt/smith.hpp"

namespace nilfilt {

ElementSet close_set(const FiniteGroup& g, const ElementSet& start, std::span<const Elem> old_gens,
                     std::span<const Elem> extra) {
  ElementSet set = start;
  std::vector<Elem> list;
  if (set.empty()) {
    set = g.empty_set();
    set.insert(FiniteGroup::kIdentity);
    list.push_back(FiniteGroup::kIdentity);
  } else {
    list = set.to_vector();
  }
  const std::size_t seeded = list.size();
  // Seeded elements are already closed under old_gens; they only need the
  // new generators. Everything discovered later needs all of them.
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto visit = [&](Elem s) {
      const Elem p = g.mul(list[i], s);
      if (!set.contains(p)) {
        set.insert(p);
        list.push_back(p);
      }
    };
    for (auto s : extra) visit(s);
    if (i >= seeded)
      for (auto s : old_gens) visit(s);
  }
  return set;
}

namespace {

std::vector<Elem> greedy_generators(const FiniteGroup& g, const ElementSet& elems) {
  std::vector<Elem> gens;
  ElementSet cur = g.empty_set();
  cur.insert(FiniteGroup::kIdentity);
  elems.for_each([&](Elem x) {
    if (cur.contains(x)) return;
    const Elem extra[] = {x};
    cur = close_set(g, cur, gens, extra);
    gens.push_back(x);
  });
  return gens;
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& g, ElementSet set, std::vector<Elem> gens)
    : parent_(&g), set_(std::move(set)), generators_(std::move(gens)) {
  elements_ = set_.to_vector();
}

Subgroup Subgroup::generated(const FiniteGroup& g, std::span<const Elem> gens) {
  for (auto x : gens)
    if (x >= g.order()) throw ValidationError("element id " + std::to_string(x) + " out of range");
  ElementSet set = close_set(g, ElementSet(), {}, gens);
  return Subgroup(g, std::move(set), std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  ElementSet s = g.empty_set();
  s.insert(FiniteGroup::kIdentity);
  return Subgroup(g, std::move(s), {});
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  ElementSet s = g.all_elements();
  auto gens = greedy_generators(g, s);
  return Subgroup(g, std::move(s), std::move(gens));
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, const ElementSet& elems) {
  if (elems.capacity() != g.order()) throw ValidationError("element set does not match group order");
  if (!elems.contains(FiniteGroup::kIdentity)) throw ValidationError("subset does not contain the identity");
  const auto list = elems.to_vector();
  for (auto a : list)
    for (auto b : list)
      if (!elems.contains(g.mul(a, b))) throw ValidationError("subset is not closed under multiplication");
  return Subgroup(g, elems, greedy_generators(g, elems));
}

Subgroup Subgroup::from_closure(const FiniteGroup& g, ElementSet elems, std::vector<Elem> gens) {
  return Subgroup(g, std::move(elems), std::move(gens));
}

bool Subgroup::is_abelian() const {
  const auto& g = parent();
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!g.commute(generators_[i], generators_[j])) return false;
  return true;
}

bool Subgroup::is_normal() const {
  const auto& g = parent();
  for (Elem c = 0; c < g.order(); ++c)
    for (auto x : generators_)
      if (!set_.contains(g.conjugate(x, c))) return false;
  return true;
}

Subgroup Subgroup::conjugate(Elem c) const {
  const auto& g = parent();
  ElementSet s = g.empty_set();
  for (auto x : elements_) s.insert(g.conjugate(x, c));
  std::vector<Elem> gens;
  for (auto x : generators_) gens.push_back(g.conjugate(x, c));
  return Subgroup(g, std::move(s), std::move(gens));
}

Subgroup join(const Subgroup& h, Elem x) {
  if (h.contains(x)) return h;
  const Elem extra[] = {x};
  ElementSet s = close_set(h.parent(), h.set(), h.generators(), extra);
  auto gens = h.generators();
  gens.push_back(x);
  return Subgroup::from_closure(h.parent(), std::move(s), std::move(gens));
}

namespace {

// Normal closure of <seed_gens> under conjugation by `conj`.
Subgroup normal_closure(const FiniteGroup& g, std::vector<Elem> seed, std::span<const Elem> conj) {
  std::vector<Elem> gens;
  ElementSet set = g.empty_set();
  set.insert(FiniteGroup::kIdentity);
  auto adjoin = [&](Elem x) {
    if (set.contains(x)) return;
    const Elem extra[] = {x};
    set = close_set(g, set, gens, extra);
    gens.push_back(x);
  };
  for (auto x : seed) adjoin(x);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (auto c : conj) adjoin(g.conjugate(gens[i], c));
  return Subgroup::from_closure(g, std::move(set), std::move(gens));
}

}  // namespace

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  if (&h.parent() != &k.parent()) throw ValidationError("commutator_subgroup: subgroups of different groups");
  const auto& g = h.parent();
  // [<X>,<Y>] is the normal closure of [X,Y] in <X,Y>.
  std::vector<Elem> seed;
  for (auto x : h.generators())
    for (auto y : k.generators()) {
      const Elem c = g.commutator(x, y);
      if (c != FiniteGroup::kIdentity) seed.push_back(c);
    }
  std::vector<Elem> conj = h.generators();
  conj.insert(conj.end(), k.generators().begin(), k.generators().end());
  return normal_closure(g, std::move(seed), conj);
}

Subgroup next_series_term(const Subgroup& term, const Subgroup& h, SeriesKind kind) {
  Subgroup next = commutator_subgroup(term, h);
  if (!kind.p_local()) return next;
  std::vector<Elem> powers;
  for (auto t : term.elements()) {
    const Elem x = term.parent().pow(t, kind.prime);
    if (!next.contains(x)) powers.push_back(x);
  }
  if (powers.empty()) return next;
  ElementSet s = close_set(h.parent(), next.set(), next.generators(), powers);
  auto gens = next.generators();
  gens.insert(gens.end(), powers.begin(), powers.end());
  return Subgroup::from_closure(h.parent(), std::move(s), std::move(gens));
}

SeriesRecord central_series(const Subgroup& h, SeriesKind kind) {
  SeriesRecord rec;
  rec.kind = kind;
  rec.terms.push_back(h);
  while (!rec.terms.back().is_trivial()) {
    Subgroup next = next_series_term(rec.terms.back(), h, kind);
    if (next == rec.terms.back()) break;
    rec.terms.push_back(std::move(next));
  }
  if (rec.terms.back().is_trivial()) rec.nilpotency_class = static_cast<int>(rec.terms.size()) - 1;
  return rec;
}

bool class_below(const Subgroup& h, int q, SeriesKind kind) {
  if (q == kQInfinity) return true;
  if (h.is_trivial()) return true;
  if (q <= 1) return false;
  if (q == 2) {
    if (!h.is_abelian()) return false;
    if (!kind.p_local()) return true;
    for (auto x : h.generators())
      if (h.parent().pow(x, kind.prime) != FiniteGroup::kIdentity) return false;
    return true;
  }
  Subgroup term = h;
  for (int i = 1; i < q; ++i) {
    Subgroup next = next_series_term(term, h, kind);
    if (next.is_trivial()) return true;
    if (next == term) return false;
    term = std::move(next);
  }
  return false;
}

Subgroup centralizer(const FiniteGroup& g, std::span<const Elem> s) {
  ElementSet set = g.empty_set();
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : s)
      if (!g.commute(x, y)) {
        ok = false;
        break;
      }
    if (ok) set.insert(x);
  }
  auto gens = greedy_generators(g, set);
  return Subgroup::from_closure(g, std::move(set), std::move(gens));
}

Subgroup center(const FiniteGroup& g) {
  const Subgroup all = Subgroup::whole(g);
  return centralizer(g, all.generators());
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.parent();
  ElementSet set = g.empty_set();
  for (Elem c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (auto x : h.generators())
      if (!h.contains(g.conjugate(x, c))) {
        ok = false;
        break;
      }
    if (ok) set.insert(c);
  }
  auto gens = greedy_generators(g, set);
  return Subgroup::from_closure(g, std::move(set), std::move(gens));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  ConjugacyClasses cc;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  cc.class_of.assign(g.order(), kUnset);
  for (Elem x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != kUnset) continue;
    const std::size_t idx = cc.classes.size();
    std::vector<Elem> cls;
    for (Elem c = 0; c < g.order(); ++c) {
      const Elem y = g.conjugate(x, c);
      if (cc.class_of[y] == kUnset) {
        cc.class_of[y] = idx;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc.classes.push_back(std::move(cls));
    cc.representatives.push_back(x);
  }
  return cc;
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t r = 1;
  if (p < 2) return 1;
  while (n % static_cast<std::size_t>(p) == 0) {
    n /= static_cast<std::size_t>(p);
    r *= static_cast<std::size_t>(p);
  }
  return r;
}

namespace {

bool is_p_power(std::size_t n, int p) { return p_part(n, p) == n; }

}  // namespace

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, int p) {
  const std::size_t target = p_part(g.order(), p);
  if (target == 1) return {Subgroup::trivial(g)};

  // Seed with a cyclic p-subgroup of largest order.
  Elem seed = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (is_p_power(g.element_order(x), p) && g.element_order(x) > g.element_order(seed)) seed = x;
  const Elem seed_gens[] = {seed};
  Subgroup P = Subgroup::generated(g, seed_gens);

  // A non-Sylow p-subgroup has p | [N(P):P], so some p-element of N(P)
  // outside P exists and <P, y> is again a p-group.
  while (P.order() < target) {
    const Subgroup n = normalizer(P);
    bool grown = false;
    for (auto y : n.elements()) {
      if (P.contains(y) || !is_p_power(g.element_order(y), p)) continue;
      P = join(P, y);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("sylow_subgroups: normalizer has no p-element outside P");
  }

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> out;
  for (Elem c = 0; c < g.order(); ++c) {
    Subgroup q = P.conjugate(c);
    if (seen.insert(q.set()).second) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianPresentation abelian_presentation(const Subgroup& h) {
  if (!h.is_abelian()) throw ValidationError("abelian_presentation: subgroup is not abelian");
  const auto& g = h.parent();
  AbelianPresentation pres;
  pres.generators = greedy_generators(g, h.set());
  const std::size_t m = pres.generators.size();
  pres.coords.assign(g.order(), {});
  pres.relations = IntegerMatrix(0, m);
  // Spanning tree of the Cayley graph; every non-tree edge gives a relation,
  // and together they generate the kernel of Z^m -> H.
  std::vector<Elem> queue{FiniteGroup::kIdentity};
  pres.coords[FiniteGroup::kIdentity].assign(m, 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem e = queue[i];
    for (std::size_t k = 0; k < m; ++k) {
      const Elem f = g.mul(e, pres.generators[k]);
      std::vector<long long> v = pres.coords[e];
      v[k] += 1;
      if (pres.coords[f].empty()) {
        pres.coords[f] = std::move(v);
        queue.push_back(f);
        continue;
      }
      std::vector<std::pair<std::size_t, long long>> row;
      for (std::size_t c = 0; c < m; ++c)
        if (v[c] != pres.coords[f][c]) row.push_back({c, v[c] - pres.coords[f][c]});
      if (!row.empty()) pres.relations.append_row(std::move(row));
    }
  }
  return pres;
}

AbelianGroup abelian_decomposition(const Subgroup& h) {
  return cokernel_invariants(abelian_presentation(h).relations);
}

AbelianGroup abelian_invariants(const Subgroup& h) {
  const auto& g = h.parent();
  const Subgroup d = commutator_subgroup(h, h);
  if (d.is_trivial()) return abelian_decomposition(h);
  // Coset group H/[H,H], then decompose it as a whole group.
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(g.order(), kUnset);
  std::vector<Elem> reps;
  for (auto x : h.elements()) {
    if (coset_of[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : d.elements()) coset_of[g.mul(x, y)] = id;
  }
  const std::size_t n = reps.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = coset_of[g.mul(reps[a], reps[b])];
  const FiniteGroup quotient = FiniteGroup::from_table(g.name() + "/[H,H]", table);
  return abelian_decomposition(Subgroup::whole(quotient));
}

}  // namespace nilfilt
