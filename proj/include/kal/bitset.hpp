#ifndef KAL_BITSET_HPP_
#define KAL_BITSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kal {

// Fixed-width dynamic bitset. Comparison is by numeric value (bit 0 least
// significant), which gives the canonical ordering used for subset-valued
// matrix entries and for subset states in the pair construction.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::uint32_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::uint32_t bit_capacity() const { return nbits_; }

  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : words_) {
      c += static_cast<std::uint32_t>(std::popcount(w));
    }
    return c;
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) {
        return true;
      }
    }
    return false;
  }

  bool none() const { return !any(); }

  bool intersects(Bitset const& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) {
        return true;
      }
    }
    return false;
  }

  Bitset& operator|=(Bitset const& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  bool operator==(Bitset const&) const = default;

  std::strong_ordering operator<=>(Bitset const& other) const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (auto c = words_[i] <=> other.words_[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  // Calls f(i) for every set bit, ascending.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(w));
        f(static_cast<std::uint32_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  // Value of the bitset as an integer; requires at most 64 bits.
  std::uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::uint32_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace kal

#endif  // KAL_BITSET_HPP_
