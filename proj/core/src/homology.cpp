#include "nilfilt/homology.hpp"

#include <numeric>

#include <json.hpp>

#include "nilfilt/smith.hpp"
#include "nilfilt/subgroup_cache.hpp"
#include "nilfilt/tc.hpp"

namespace nilfilt {

std::string method_name(Method m) {
  switch (m) {
    case Method::DirectSnf: return "direct-snf";
    case Method::IqPresentation: return "Iq-presentation";
    case Method::SequenceIII: return "sequence-III";
    case Method::WedgeFormula: return "wedge-formula";
  }
  return "unknown";
}

namespace {

HomologyResult make_result(const FiniteGroup& g, int q, Space s, int i, AbelianGroup value, Method m) {
  return HomologyResult{g.name(), q, s, i, std::move(value), m};
}

AbelianGroup from_factors(std::size_t basis, std::size_t rank_in, const std::vector<BigInt>& out_factors) {
  return AbelianGroup::from_cyclic_orders(basis - rank_in - out_factors.size(), out_factors);
}

}  // namespace

HomologyResult homology(const ChainComplex& c, int i) {
  if (i < 0 || i >= c.dmax)
    throw ValidationError("homology degree " + std::to_string(i) + " needs a complex through degree " +
                          std::to_string(i + 1));
  const std::size_t rank_in = i == 0 ? 0 : matrix_rank(c.boundary[i]);
  const auto f = invariant_factors(c.boundary[i + 1]);
  return make_result(*c.group, c.q, c.space, i, from_factors(c.sizes[i], rank_in, f), Method::DirectSnf);
}

std::vector<HomologyResult> homology_through(const ChainComplex& c) {
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(c.dmax) + 1);
  for (int d = 1; d <= c.dmax; ++d) factors[d] = invariant_factors(c.boundary[d]);
  std::vector<HomologyResult> out;
  for (int i = 0; i < c.dmax; ++i)
    out.push_back(make_result(*c.group, c.q, c.space, i, from_factors(c.sizes[i], factors[i].size(), factors[i + 1]),
                              Method::DirectSnf));
  return out;
}

HomologyResult h1_via_Iq(const FiniteGroup& g, int q, Variant v) {
  validate_bound(q, v);
  SubgroupCache cache(g, q, v.series());
  IntegerMatrix rel(0, g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const auto hx = cache.join(SubgroupCache::trivial(), x);
    for (Elem y = 0; y < g.order(); ++y) {
      if (!cache.admissible(cache.join(hx, y))) continue;
      rel.append_row({{y, 1}, {g.mul(x, y), -1}, {x, 1}});
    }
  }
  return make_result(g, q, Space::B, 1, cokernel_invariants(rel), Method::IqPresentation);
}

InducedH1Map induced_h1_map(const FiniteGroup& g, int q, Variant v) {
  const ChainComplex b = build_chain_complex(g, q, Space::B, 2, v);
  const std::size_t n = g.order();
  const Count mu2 = b.tuple_count(2);
  if (n * (n + mu2) > kMaxChainBasis)
    throw GuardExceeded("E(q,G) through degree 2 exceeds " + std::to_string(kMaxChainBasis) + " simplices");

  InducedH1Map r;
  r.h1_b = homology(b, 1).value;
  // Spanning tree of E's 1-skeleton: the edges (1; a) from 1 to a. The
  // fundamental cycle of (a; x) is (1; a) + (a; x) - (1; ax), and the
  // projection (z; x) -> x sends it to a + x - ax. C_1(B) has basis G \ 1.
  r.map = IntegerMatrix(0, n - 1);
  for (Elem a = 1; a < n; ++a)
    for (Elem x = 1; x < n; ++x) {
      std::vector<std::pair<std::size_t, long long>> row{{a - 1, 1}, {x - 1, 1}};
      const Elem ax = g.mul(a, x);
      if (ax != FiniteGroup::kIdentity) row.push_back({ax - 1, -1});
      r.map.append_row(std::move(row));
    }
  IntegerMatrix rel = b.boundary[2];
  rel.append_rows(r.map);
  r.cokernel = cokernel_invariants(rel);
  r.abelianization = abelian_invariants(Subgroup::whole(g));
  r.matches_abelianization = r.cokernel == r.abelianization;
  r.feit_thompson_flag = n % 2 == 1 && !r.cokernel.is_trivial();
  return r;
}

HomologyResult tc_h1_via_sequence_III(const FiniteGroup& g) {
  if (!is_tc(g).is_tc) throw ValidationError("sequence III needs a TC group; " + g.name() + " is not");
  const Subgroup z = center(g);
  const CentralizerCover cover = g.is_abelian() ? CentralizerCover{} : centralizer_cover(g);
  std::vector<AbelianPresentation> pres{abelian_presentation(z)};
  for (const auto& c : cover.subgroups) pres.push_back(abelian_presentation(c));
  std::vector<std::size_t> offset{0};
  for (const auto& p : pres) offset.push_back(offset.back() + p.generators.size());

  IntegerMatrix rel(0, offset.back());
  for (std::size_t b = 0; b < pres.size(); ++b)
    for (std::size_t r = 0; r < pres[b].relations.rows(); ++r) {
      std::vector<std::pair<std::size_t, long long>> row;
      for (const auto& e : pres[b].relations.row(r))
        row.push_back({offset[b] + e.col, static_cast<long long>(e.value)});
      rel.append_row(std::move(row));
    }
  // Image of phi_*: each generator z_s of Z(G) in the first summand equals
  // its image in every C_i.
  const auto& zp = pres[0];
  for (std::size_t i = 1; i < pres.size(); ++i)
    for (std::size_t s = 0; s < zp.generators.size(); ++s) {
      std::vector<std::pair<std::size_t, long long>> row{{s, 1}};
      const auto& coords = pres[i].coords[zp.generators[s]];
      for (std::size_t c = 0; c < coords.size(); ++c)
        if (coords[c] != 0) row.push_back({offset[i] + c, -coords[c]});
      rel.append_row(std::move(row));
    }
  return make_result(g, 2, Space::B, 1, cokernel_invariants(rel), Method::SequenceIII);
}

HomologyResult tc_homology_via_wedge(const FiniteGroup& g, int i) {
  if (i != 1 && i != 2) throw ValidationError("wedge formula is implemented for degrees 1 and 2");
  const TCReport rep = tc_invariants(g);
  if (rep.center_order != 1) throw ValidationError("wedge formula needs a trivial center");
  std::vector<std::int64_t> orders;
  for (const auto& t : rep.wedge)
    for (std::size_t m = 0; m < t.multiplicity; ++m) {
      const auto& d = t.sylow.torsion;
      if (i == 1) orders.insert(orders.end(), d.begin(), d.end());
      else
        for (std::size_t a = 0; a < d.size(); ++a)
          for (std::size_t b = a + 1; b < d.size(); ++b) orders.push_back(std::gcd(d[a], d[b]));
    }
  return make_result(g, 2, Space::B, i, AbelianGroup::from_cyclic_orders(0, orders), Method::WedgeFormula);
}

H1Chain h1_surjectivity_chain(const FiniteGroup& g, Variant v) {
  H1Chain chain;
  for (int q = 2; q <= stabilization_exponent(g); ++q) chain.qs.push_back(q);
  chain.qs.push_back(kQInfinity);
  std::vector<ChainComplex> cs;
  for (int q : chain.qs) {
    cs.push_back(build_chain_complex(g, q, Space::B, 2, v));
    chain.h1.push_back(homology(cs.back(), 1).value);
  }
  const std::size_t n1 = cs.front().sizes[1];
  for (std::size_t s = 0; s + 1 < cs.size(); ++s) {
    const auto& lo = cs[s];
    const auto& hi = cs[s + 1];
    for (std::size_t t = 0; t < lo.tuple_count(2); ++t)
      if (hi.index_of(2, lo.tuples[2].data() + 2 * t) == ChainComplex::npos) chain.surjective = false;
    // The map sends each basis 1-simplex to itself; it is onto iff the
    // target modulo the image is zero.
    IntegerMatrix rel = hi.boundary[2];
    rel.append_rows(IntegerMatrix::identity(n1));
    if (!cokernel_invariants(rel).is_trivial()) chain.surjective = false;
  }
  return chain;
}

std::string homology_json(const HomologyResult& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  if (r.q == kQInfinity) j["q"] = "inf";
  else j["q"] = r.q;
  j["space"] = space_name(r.space);
  j["i"] = r.degree;
  j["rank"] = r.value.rank;
  j["torsion"] = r.value.torsion;
  j["method"] = method_name(r.method);
  return j.dump() + "\n";
}

}  // namespace nilfilt
