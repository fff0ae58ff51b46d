#include "dissoc/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {
std::size_t words_for(std::size_t capacity) {
  return (capacity + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}
}  // namespace

VertexSet::VertexSet(std::size_t capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_indices(std::size_t capacity, std::span<const Vertex> members) {
  VertexSet s(capacity);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = capacity % kWordBits; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= capacity_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for set of capacity " +
                        std::to_string(capacity_));
  }
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v < capacity_) words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

void VertexSet::check_same_capacity(const VertexSet& other) const {
  if (capacity_ != other.capacity_) throw ArgumentError("vertex sets over different universes");
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_capacity(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_capacity(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_capacity(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace dissoc
