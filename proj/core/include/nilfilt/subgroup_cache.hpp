#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nilfilt/subgroup.hpp"

namespace nilfilt {

// Interns subgroups of one group and memoizes joins <H, x> and the class test
// for a fixed (q, series kind). Not thread-safe; use one per worker.
class SubgroupCache {
 public:
  using Id = std::uint32_t;

  SubgroupCache(const FiniteGroup& g, int q, SeriesKind kind);

  const FiniteGroup& group() const { return *group_; }
  int q() const { return q_; }
  SeriesKind kind() const { return kind_; }

  static constexpr Id trivial() { return 0; }
  Id intern(const Subgroup& h);
  Id join(Id h, Elem x);
  bool admissible(Id h);

  const Subgroup& subgroup(Id h) const { return nodes_[h].sub; }
  bool contains(Id h, Elem x) const { return nodes_[h].sub.contains(x); }
  std::size_t order(Id h) const { return nodes_[h].sub.order(); }
  std::size_t size() const { return nodes_.size(); }

 private:
  static constexpr Id kUnset = static_cast<Id>(-1);

  struct Node {
    Subgroup sub;
    std::int8_t admissible = -1;  // -1 unknown
    std::vector<Id> joins;        // lazily sized to |G|
  };

  const FiniteGroup* group_;
  int q_;
  SeriesKind kind_;
  std::vector<Node> nodes_;
  std::unordered_map<ElementSet, Id, ElementSetHash> index_;
};

}  // namespace nilfilt
