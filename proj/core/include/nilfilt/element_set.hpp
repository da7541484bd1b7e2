#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nilfilt {

using Elem = std::uint32_t;

// Fixed-capacity bitset over element ids 0..capacity-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  std::size_t capacity() const { return capacity_; }

  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  bool operator==(const ElementSet& other) const = default;
  // Lexicographic order on the sorted element lists.
  bool lex_less(const ElementSet& other) const;

  std::vector<Elem> to_vector() const;
  std::size_t hash() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace nilfilt
