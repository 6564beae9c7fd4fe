#pragma once

#include <cstdint>
#include <vector>

namespace lubell {

// Fixed-capacity dynamic bitset, just enough for candidate propagation in
// embedding search and comparability rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n, bool ones = false) : n_(n), w_((n + 63) / 64, ones ? ~0ull : 0ull) {
    trim();
  }

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  // First set bit at or after i; -1 when none.
  int next(int i) const {
    if (i >= n_) return -1;
    std::size_t k = static_cast<std::size_t>(i) >> 6;
    std::uint64_t w = w_[k] & (~0ull << (i & 63));
    while (true) {
      if (w) return static_cast<int>(k << 6) + __builtin_ctzll(w);
      if (++k >= w_.size()) return -1;
      w = w_[k];
    }
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
  }
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace lubell
