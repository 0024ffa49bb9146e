#pragma once

#include <cstdint>
#include <vector>

namespace monolith {

// A subset of the elements 0..universe-1 of a finite group, stored as a
// bitset. Closure properties (subgroup, normal) are maintained by the
// functions that produce these sets, not by the type itself.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static ElementSet singleton(int universe, int element) {
    ElementSet s(universe);
    s.insert(element);
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int e) const {
    return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  // Returns true when the element was not already present.
  bool insert(int e) {
    std::uint64_t& word = bits_[static_cast<std::size_t>(e) >> 6];
    std::uint64_t mask = std::uint64_t{1} << (e & 63);
    bool added = !(word & mask);
    word |= mask;
    return added;
  }

  int count() const {
    int n = 0;
    for (std::uint64_t w : bits_) n += __builtin_popcountll(w);
    return n;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
  }

  bool operator==(const ElementSet& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  // Order by (size, lexicographic characteristic vector, element 0 first,
  // absent < present). Used wherever subgroup lists must be deterministic.
  bool lex_less(const ElementSet& other) const {
    int ca = count(), cb = other.count();
    if (ca != cb) return ca < cb;
    for (int e = 0; e < universe_; ++e) {
      bool a = contains(e), b = other.contains(e);
      if (a != b) return !a;
    }
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int e = 0; e < universe_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return bits_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace monolith
