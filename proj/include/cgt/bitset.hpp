#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cgt {

/// Fixed-length bitset sized at runtime. Used for element sets over a group's
/// element table; bit i corresponds to element index i.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  std::int64_t count() const {
    std::int64_t c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const DynBitset& o) const { return !(*this == o); }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  /// All bits flipped (within size).
  DynBitset complemented() const {
    DynBitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    int tail = n_ & 63;
    if (tail) r.w_.back() &= (std::uint64_t(1) << tail) - 1;
    return r;
  }

  int find_first() const { return find_next(-1); }
  int find_next(int prev) const {
    int i = prev + 1;
    if (i >= n_) return -1;
    std::size_t wi = i >> 6;
    std::uint64_t cur = w_[wi] & (~std::uint64_t(0) << (i & 63));
    while (true) {
      if (cur) {
        int r = int(wi * 64) + __builtin_ctzll(cur);
        return r < n_ ? r : -1;
      }
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t cur = w_[wi];
      while (cur) {
        f(int(wi * 64) + __builtin_ctzll(cur));
        cur &= cur - 1;
      }
    }
  }

  /// Canonical order: the set containing the earliest distinguishing element
  /// index is the smaller one.
  bool lex_less(const DynBitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] != o.w_[i]) {
        std::uint64_t diff = w_[i] ^ o.w_[i];
        std::uint64_t low = diff & ~(diff - 1);
        return (w_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ std::uint64_t(n_));
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct DynBitsetHasher {
  std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace cgt
