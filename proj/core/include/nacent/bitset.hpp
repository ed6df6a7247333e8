#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nacent {

// Fixed-length bitset over element indices. Word-wise set algebra is the
// hot path for centralizer deduplication, so everything here is inline.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t length() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void set_all() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }

  bool is_subset_of(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(wi * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  // Index of the lowest set bit, or length() if empty.
  std::size_t first() const noexcept {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return n_;
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Orders sets by their sorted member lists, lexicographically.
  static bool lex_less(const Bitset& a, const Bitset& b) noexcept {
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
      const Word x = a.words_[wi] ^ b.words_[wi];
      if (!x) continue;
      const auto bit = std::countr_zero(x);
      // The set holding the lowest differing element sorts first unless the
      // other set has already run out of members before that point.
      const Word below = (Word{1} << bit) - 1;
      const bool a_has = (a.words_[wi] >> bit) & 1u;
      const Word& rest = a_has ? b.words_[wi] : a.words_[wi];
      bool other_has_more = (rest & ~below) != 0;
      for (std::size_t wj = wi + 1; !other_has_more && wj < a.words_.size(); ++wj)
        other_has_more = (a_has ? b.words_[wj] : a.words_[wj]) != 0;
      return a_has ? other_has_more : !other_has_more;
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Word w : words_) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() noexcept {
    if (n_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace nacent
