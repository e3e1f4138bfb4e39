#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace ncg {

/// Fixed-size dynamic bitset. Small and predictable; used for graph
/// adjacency rows and conjugacy-class subsets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t(0);
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const = default;

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int find_first() const { return find_next(-1); }

  // First set bit strictly after i, or -1.
  int find_next(int i) const {
    int from = i + 1;
    if (from >= n_) return -1;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) fn(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::size_t hash() const {
    std::size_t h = std::size_t(n_) * 0x9e3779b97f4a7c15ull;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ncg
