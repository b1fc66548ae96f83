#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace edgecol {

// Fixed-width bitset sized at runtime. Used for adjacency rows and
// per-vertex missing-color sets.
class DynBitset {
 public:
  static constexpr int npos = -1;

  DynBitset() = default;
  explicit DynBitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  void resize(int bits) {
    bits_ = bits;
    words_.resize((bits + 63) / 64, 0);
    clear_tail();
  }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(int i, bool value) { value ? set(i) : reset(i); }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    clear_tail();
  }
  void reset_all() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // First set bit at index >= from, or npos.
  int find_next(int from) const {
    if (from >= bits_) return npos;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        int idx = static_cast<int>(wi * 64 + std::countr_zero(w));
        return idx < bits_ ? idx : npos;
      }
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  // First bit set in both this and other, or npos.
  int find_first_common(const DynBitset& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = words_[i] & other.words_[i];
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
    }
    return npos;
  }

  int count_common(const DynBitset& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    int c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    clear_tail();
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend bool operator==(const DynBitset&, const DynBitset&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int idx = static_cast<int>(wi * 64 + std::countr_zero(w));
        f(idx);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void clear_tail() {
    if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  }

  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace edgecol
