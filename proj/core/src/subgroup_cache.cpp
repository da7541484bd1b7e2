#include "nilfilt/subgroup_cache.hpp"

namespace nilfilt {

SubgroupCache::SubgroupCache(const FiniteGroup& g, int q, SeriesKind kind) : group_(&g), q_(q), kind_(kind) {
  intern(Subgroup::trivial(g));
}

SubgroupCache::Id SubgroupCache::intern(const Subgroup& h) {
  auto [it, inserted] = index_.emplace(h.set(), static_cast<Id>(nodes_.size()));
  if (inserted) nodes_.push_back(Node{h, -1, {}});
  return it->second;
}

SubgroupCache::Id SubgroupCache::join(Id h, Elem x) {
  if (nodes_[h].sub.contains(x)) return h;
  if (nodes_[h].joins.empty()) nodes_[h].joins.assign(group_->order(), kUnset);
  Id& slot = nodes_[h].joins[x];
  if (slot != kUnset) return slot;
  const Id id = intern(nilfilt::join(nodes_[h].sub, x));
  // intern may reallocate nodes_, so index again
  nodes_[h].joins[x] = id;
  return id;
}

bool SubgroupCache::admissible(Id h) {
  auto& node = nodes_[h];
  if (node.admissible < 0) node.admissible = class_below(node.sub, q_, kind_) ? 1 : 0;
  return node.admissible == 1;
}

}  // namespace nilfilt
