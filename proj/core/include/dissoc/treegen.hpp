#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dissoc/forest.hpp"

namespace dissoc {

/// Pre-order level sequence of a rooted tree; the root has level 1.
struct LevelSequence {
  std::vector<std::uint32_t> seq;

  friend bool operator==(const LevelSequence&, const LevelSequence&) = default;
};

/// Builds the tree whose vertex i is the i-th entry of the level sequence.
Forest forest_from_levels(const LevelSequence& levels);

/// Constant-amortized-time generator of free trees of order n, one per
/// isomorphism class, in lexicographically decreasing order of the level
/// sequence of the tree rooted at its centre.
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n);

  /// Advances to the next tree; false once the stream is exhausted.
  bool next();
  const LevelSequence& current() const { return current_; }
  Forest tree() const { return forest_from_levels(current_); }
  /// Zero-based position of the current tree in the stream.
  std::size_t index() const { return index_; }

 private:
  std::size_t n_;
  bool started_ = false;
  bool done_ = false;
  std::size_t index_ = 0;
  std::vector<std::uint32_t> layout_;  // 0-based levels
  LevelSequence current_;
};

std::vector<Forest> free_trees(std::size_t n);
std::uint64_t count_free_trees(std::size_t n);

/// Visits trees with stream index in [begin, end).
void for_each_free_tree(std::size_t n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(std::uint64_t, const Forest&)>& fn);

/// Splits the stream into `jobs` contiguous index ranges processed on separate
/// threads. `fn` receives (worker, index, tree); workers own disjoint ranges.
void parallel_for_each_free_tree(std::size_t n, std::size_t jobs,
                                 const std::function<void(std::size_t, std::uint64_t, const Forest&)>& fn);

/// Labeled tree of a Pruefer sequence over {0..n-1}, n = seq.size() + 2.
Forest pruefer_decode(std::span<const Vertex> seq);

inline constexpr std::size_t kPrueferLimit = 9;

/// All n^(n-2) labeled trees on {0..n-1}. Throws GuardError above `max_n`.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Forest&)>& fn,
                           std::size_t max_n = kPrueferLimit);
std::vector<Forest> labeled_trees_pruefer(std::size_t n, std::size_t max_n = kPrueferLimit);

}  // namespace dissoc
