#include "nilfilt/nilposet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nilfilt/integer_matrix.hpp"
#include "nilfilt/smith.hpp"
#include "nilfilt/subgroup_cache.hpp"

namespace nilfilt {

namespace {

using Id = SubgroupCache::Id;

// Walks every admissible subgroup by adjoining one element at a time. A
// subgroup with no admissible one-element extension is maximal.
void walk_admissible(SubgroupCache& cache, std::vector<Id>& members, std::vector<Id>& maximal) {
  const auto& g = cache.group();
  std::vector<char> seen(1, 1);
  std::vector<Id> stack{SubgroupCache::trivial()};
  while (!stack.empty()) {
    const Id h = stack.back();
    stack.pop_back();
    members.push_back(h);
    bool is_max = true;
    for (Elem x = 0; x < g.order(); ++x) {
      if (cache.contains(h, x)) continue;
      const Id j = cache.join(h, x);
      if (!cache.admissible(j)) continue;
      is_max = false;
      if (seen.size() <= j) seen.resize(cache.size(), 0);
      if (!seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
    if (is_max) maximal.push_back(h);
  }
}

std::vector<Subgroup> to_sorted(const SubgroupCache& cache, const std::vector<Id>& ids) {
  std::vector<Subgroup> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(cache.subgroup(id));
  std::sort(out.begin(), out.end());
  return out;
}

// Maximal abelian subgroups: extend an abelian A inside C(A) until C(A) is
// itself abelian, at which point C(A) is maximal abelian.
std::vector<Subgroup> maximal_abelian(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen, found;
  std::vector<Subgroup> stack{Subgroup::trivial(g)};
  seen.insert(stack.back().set());
  while (!stack.empty()) {
    const Subgroup a = std::move(stack.back());
    stack.pop_back();
    Subgroup c = centralizer(g, a.generators());
    if (c.is_abelian()) {
      if (found.insert(c.set()).second) out.push_back(std::move(c));
      continue;
    }
    for (auto x : c.elements()) {
      if (a.contains(x)) continue;
      Subgroup b = join(a, x);
      if (seen.insert(b.set()).second) stack.push_back(std::move(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

NilFamily nil_family(const FiniteGroup& g, int q, Variant v) {
  validate_bound(q, v);
  if (g.order() > kMaxFamilyGroupOrder)
    throw GuardExceeded("nil_family: |G| = " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(kMaxFamilyGroupOrder) + "; use maximal_nil_subgroups");
  SubgroupCache cache(g, q, v.series());
  std::vector<Id> members, maximal;
  walk_admissible(cache, members, maximal);
  NilFamily fam;
  fam.q = q;
  fam.variant = v;
  fam.members = to_sorted(cache, members);
  fam.maximal = to_sorted(cache, maximal);
  return fam;
}

std::vector<Subgroup> maximal_nil_subgroups(const FiniteGroup& g, int q, Variant v) {
  validate_bound(q, v);
  if (q == kQInfinity) return {Subgroup::whole(g)};
  if (q == 2 && v.prime == 0) return maximal_abelian(g);
  SubgroupCache cache(g, q, v.series());
  std::vector<Id> members, maximal;
  walk_admissible(cache, members, maximal);
  return to_sorted(cache, maximal);
}

GroupGraph poset_graph(const FiniteGroup& g, int q, Variant v) {
  GroupGraph gg;
  const auto maxes = maximal_nil_subgroups(g, q, v);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (const auto& m : maxes) {
    index.emplace(m.set(), gg.vertices.size());
    gg.maximal.push_back(gg.vertices.size());
    gg.vertices.push_back(m);
  }
  std::vector<Subgroup> meets;
  for (std::size_t a = 0; a < maxes.size(); ++a)
    for (std::size_t b = a + 1; b < maxes.size(); ++b) {
      const ElementSet s = maxes[a].set() & maxes[b].set();
      if (index.count(s)) continue;
      index.emplace(s, static_cast<std::size_t>(-1));
      meets.push_back(Subgroup::from_elements(g, s));
    }
  std::sort(meets.begin(), meets.end());
  for (auto& m : meets) {
    index[m.set()] = gg.vertices.size();
    gg.vertices.push_back(std::move(m));
  }

  std::set<std::pair<std::size_t, std::size_t>> morph;
  for (std::size_t a = 0; a < maxes.size(); ++a)
    for (std::size_t b = 0; b < maxes.size(); ++b)
      if (a != b) morph.insert({index.at(maxes[a].set() & maxes[b].set()), a});
  gg.morphisms.assign(morph.begin(), morph.end());

  const std::size_t n = gg.vertices.size();
  auto below = [&](std::size_t u, std::size_t w) {
    return u != w && gg.vertices[u].order() < gg.vertices[w].order() && gg.vertices[u].is_subgroup_of(gg.vertices[w]);
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = 0; w < n; ++w) {
      if (!below(u, w)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < n && covered; ++m)
        if (below(u, m) && below(m, w)) covered = false;
      if (covered) gg.hasse.push_back({u, w});
    }
  std::sort(gg.hasse.begin(), gg.hasse.end());

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool acyclic = true;
  for (auto [u, w] : gg.hasse) {
    const auto ru = find(u), rw = find(w);
    if (ru == rw) acyclic = false;
    else parent[ru] = rw;
  }
  std::size_t components = 0;
  for (std::size_t x = 0; x < n; ++x)
    if (find(x) == x) ++components;
  gg.is_tree = acyclic && components <= 1;
  return gg;
}

std::string group_graph_tsv(const GroupGraph& gg) {
  std::ostringstream os;
  os << "from\tto\tfrom_order\tto_order\n";
  for (auto [u, w] : gg.hasse)
    os << "v" << u << "\tv" << w << "\t" << gg.vertices[u].order() << "\t" << gg.vertices[w].order() << "\n";
  return os.str();
}

Presentation colimit_presentation(const FiniteGroup& g, int q, Variant v) {
  const auto maxes = maximal_nil_subgroups(g, q, v);
  Presentation p;
  std::vector<std::map<Elem, int>> gen_of(maxes.size());
  std::map<Elem, std::vector<int>> owners;
  for (std::size_t a = 0; a < maxes.size(); ++a)
    for (auto x : maxes[a].elements()) {
      if (x == FiniteGroup::kIdentity) continue;
      p.generators.push_back("s" + std::to_string(a) + "_" + std::to_string(x));
      p.images.push_back(x);
      const int id = static_cast<int>(p.generators.size());
      gen_of[a][x] = id;
      owners[x].push_back(id);
    }
  for (std::size_t a = 0; a < maxes.size(); ++a) {
    const auto& gens = gen_of[a];
    for (const auto& [x, sx] : gens)
      for (const auto& [y, sy] : gens) {
        const Elem z = g.mul(x, y);
        if (z == FiniteGroup::kIdentity) p.relators.push_back({sx, sy});
        else p.relators.push_back({sx, sy, -gens.at(z)});
      }
  }
  for (const auto& [x, ids] : owners)
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) p.relators.push_back({ids[i], -ids[i + 1]});

  IntegerMatrix rel(0, p.generators.size());
  for (const auto& w : p.relators) {
    std::vector<std::pair<std::size_t, long long>> row;
    for (int s : w) row.push_back({static_cast<std::size_t>(std::abs(s) - 1), s > 0 ? 1 : -1});
    rel.append_row(std::move(row));
  }
  p.abelianization = cokernel_invariants(rel);

  bool holds = true;
  for (const auto& w : p.relators) {
    Elem acc = FiniteGroup::kIdentity;
    for (int s : w) {
      const Elem img = p.images[static_cast<std::size_t>(std::abs(s) - 1)];
      acc = g.mul(acc, s > 0 ? img : g.inv(img));
    }
    if (acc != FiniteGroup::kIdentity) holds = false;
  }
  p.surjects = holds && Subgroup::generated(g, p.images).order() == g.order();
  return p;
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& s : p.generators) os << " " << s;
  os << " ; rels:";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    for (std::size_t j = 0; j < p.relators[i].size(); ++j) os << (j ? " " : "") << p.relators[i][j];
  }
  os << "\n";
  return os.str();
}

}  // namespace nilfilt
