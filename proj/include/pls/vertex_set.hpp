#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pls {

/// Upper bound on the number of vertices of a stored complex.
inline constexpr std::size_t kMaxVertices = 128;

/// Fixed-width set of vertex indices in [0, kMaxVertices).
///
/// Iteration and `to_indices()` yield indices in increasing order, so a
/// VertexSet is the sorted index sequence of a face. `operator<` is the
/// lexicographic order on those sequences.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet from_indices(const std::vector<std::uint32_t>& indices) {
    VertexSet s;
    for (auto i : indices) s.insert(i);
    return s;
  }

  static VertexSet singleton(std::uint32_t i) {
    VertexSet s;
    s.insert(i);
    return s;
  }

  /// {0, 1, ..., count-1}
  static VertexSet prefix(std::size_t count) {
    VertexSet s;
    for (std::size_t i = 0; i < count; ++i) s.insert(static_cast<std::uint32_t>(i));
    return s;
  }

  void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] | o.words_[k];
    return r;
  }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const {
    VertexSet r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }
  VertexSet operator^(const VertexSet& o) const {
    VertexSet r;
    for (std::size_t k = 0; k < kWords; ++k) r.words_[k] = words_[k] ^ o.words_[k];
    return r;
  }
  VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

  /// Smallest element, or kMaxVertices when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return kMaxVertices;
  }
  /// Largest element, or kMaxVertices when empty.
  std::size_t last() const {
    for (std::size_t k = kWords; k-- > 0;)
      if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return kMaxVertices;
  }
  /// Smallest element strictly greater than i, or kMaxVertices.
  std::size_t next(std::size_t i) const {
    ++i;
    if (i >= kMaxVertices) return kMaxVertices;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == kWords) return kMaxVertices;
      w = words_[k];
    }
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    for (auto i = first(); i < kMaxVertices; i = next(i))
      out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }

  class Iterator {
   public:
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    Iterator() = default;
    Iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}
    std::uint32_t operator*() const { return static_cast<std::uint32_t>(pos_); }
    Iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = kMaxVertices;
  };
  Iterator begin() const { return {this, first()}; }
  Iterator end() const { return {this, kMaxVertices}; }

  std::uint64_t word(std::size_t k) const { return words_[k]; }
  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return h ^ (h >> 33);
  }

  bool operator==(const VertexSet&) const = default;

  /// Lexicographic order of the sorted index sequences.
  std::strong_ordering operator<=>(const VertexSet& o) const {
    const VertexSet diff = *this ^ o;
    const std::size_t x = diff.first();
    if (x == kMaxVertices) return std::strong_ordering::equal;
    // Both sequences agree below x and exactly one of them holds x. The
    // holder is smaller iff the other sequence continues past x.
    const bool this_holds = contains(static_cast<std::uint32_t>(x));
    const VertexSet& other = this_holds ? o : *this;
    const bool holder_smaller = other.next(x) < kMaxVertices;
    if (this_holds == holder_smaller) return std::strong_ordering::less;
    return std::strong_ordering::greater;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    return static_cast<std::size_t>(s.hash());
  }
};

/// A face: sorted set of vertex indices into the owning complex's label table.
using Face = VertexSet;

}  // namespace pls
