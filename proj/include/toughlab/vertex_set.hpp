#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace toughlab {

/// Largest supported vertex count. Adjacency rows and vertex sets are single
/// 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A set of vertex labels in [0, 64) stored as one machine word.
class VertexSet {
 public:
  using word_type = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet(n >= 64 ? ~word_type{0} : (word_type{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(word_type{1} << v); }
  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr word_type bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(int v) { bits_ |= word_type{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(word_type{1} << v); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  word_type bits_ = 0;
};

}  // namespace toughlab
