#pragma once

#include <cstdint>
#include <vector>

namespace pointsep {

// Fixed-universe bitset used for point-id sets and side masks.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v = true) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }

  Bits complement() const {
    Bits out = *this;
    for (auto& w : out.w_) w = ~w;
    out.trim();
    return out;
  }

  Bits operator^(const Bits& o) const {
    Bits out = *this;
    for (size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= o.w_[i];
    return out;
  }
  void xor_with(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  int count_xor(const Bits& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i)
      c += __builtin_popcountll(w_[i] ^ o.w_[i]);
    return c;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }
  bool operator<(const Bits& o) const { return w_ < o.w_; }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }

  const std::vector<uint64_t>& words() const { return w_; }

  std::vector<int> ids() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace pointsep
