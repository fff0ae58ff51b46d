#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace dissoc {

using Vertex = std::uint32_t;

/// Bit-indexed subset of {0, ..., capacity-1}. Sets over at most 64 vertices
/// live in a single inline word; larger capacities spill to the heap.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);
  static VertexSet from_indices(std::size_t capacity, std::span<const Vertex> members);
  static VertexSet full(std::size_t capacity);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < capacity_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }
  /// Lexicographic order on the ascending member lists.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  /// Ascending member list.
  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::uint64_t word(std::size_t i) const { return words_[i]; }
  std::size_t word_count() const noexcept { return words_.size(); }

 private:
  void check_same_capacity(const VertexSet& other) const;

  std::size_t capacity_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace dissoc
