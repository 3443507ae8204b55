#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oddcycle {

using Vertex = std::uint32_t;
using VertexList = std::vector<Vertex>;

// Fixed-size bit vector over vertex indices. All binary operations require
// operands of equal size.
class VertexBitset {
 public:
  VertexBitset() = default;
  explicit VertexBitset(std::size_t size, bool value = false)
      : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static VertexBitset from_list(std::size_t size, const VertexList& vertices) {
    VertexBitset bits(size);
    for (Vertex v : vertices) bits.set(v);
    return bits;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from = 0) const noexcept {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  bool intersects(const VertexBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  // Lowest index set in both, or size() if disjoint.
  std::size_t first_common(const VertexBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (auto w = words_[i] & o.words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
    return size_;
  }
  std::size_t count_common(const VertexBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  VertexBitset& operator&=(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexBitset& operator|=(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexBitset& subtract(const VertexBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  // this |= (a & ~b), the BFS frontier kernel.
  void or_and_not(const VertexBitset& a, const VertexBitset& b) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= a.words_[i] & ~b.words_[i];
  }

  friend VertexBitset operator&(VertexBitset a, const VertexBitset& b) noexcept { return a &= b; }
  friend VertexBitset operator|(VertexBitset a, const VertexBitset& b) noexcept { return a |= b; }
  friend bool operator==(const VertexBitset&, const VertexBitset&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  std::uint64_t* data() noexcept { return words_.data(); }

  VertexList to_list() const {
    VertexList out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void trim() noexcept {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oddcycle
