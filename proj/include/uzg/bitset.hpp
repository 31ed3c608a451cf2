#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace uzg {

// Fixed-capacity dynamic bitset used for element sets and adjacency rows.
// Capacity is the universe size (ring order / vertex count), at most a few
// hundred in practice, so everything fits in a handful of 64-bit words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint32_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::uint32_t size() const { return size_; }

  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint32_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Index of the first set bit, or -1 when empty.
  int find_first() const { return next_from(0); }
  // Index of the first set bit at position > i, or -1.
  int find_next(std::uint32_t i) const { return next_from(i + 1); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Removes every member of o from this set.
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (int i = find_first(); i >= 0; i = find_next(i))
      out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::uint32_t>{}(size_);
    for (auto w : words_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
    return h;
  }

  // Deterministic strict ordering: smaller cardinality first; among sets of
  // equal cardinality the owner of the lowest differing element comes first
  // (i.e. member-list lexicographic order, well defined when sizes match).
  static bool set_order_less(const Bitset& a, const Bitset& b) {
    std::uint32_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  int next_from(std::uint32_t start) const {
    if (start >= size_) return -1;
    std::size_t wi = start >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) {
        std::uint32_t idx =
            static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w));
        return idx < size_ ? static_cast<int>(idx) : -1;
      }
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::uint32_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace uzg
