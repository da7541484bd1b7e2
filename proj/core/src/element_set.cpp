#include "nilfilt/element_set.hpp"

#include <bit>

namespace nilfilt {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

namespace {

bool any_above(const std::vector<std::uint64_t>& words, std::size_t word, int bit) {
  if (bit < 63 && (words[word] >> (bit + 1)) != 0) return true;
  for (std::size_t j = word + 1; j < words.size(); ++j)
    if (words[j]) return true;
  return false;
}

}  // namespace

bool ElementSet::lex_less(const ElementSet& other) const {
  // Below the first differing id both sorted lists agree. The set holding
  // that id has it as its next element; the other set either continues with
  // a larger id or ends (and is then a proper prefix, which sorts first).
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (!diff) continue;
    const int b = __builtin_ctzll(diff);
    if ((words_[i] >> b) & 1u) return any_above(other.words_, i, b);
    return !any_above(words_, i, b);
  }
  return false;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ capacity_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace nilfilt
