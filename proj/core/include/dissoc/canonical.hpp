#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dissoc/forest.hpp"

namespace dissoc {

/// Isomorphism-invariant encoding of a free tree: the parenthesised AHU
/// string of the tree rooted at its centroid. For a bicentroidal tree the
/// smaller of the two rooted strings is used.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// One or two centroid vertices (ascending). Throws ArgumentError unless `tree` is a tree.
std::vector<Vertex> centroids(const Forest& tree);

/// AHU string of the tree rooted at `root`.
std::string rooted_code(const Forest& tree, Vertex root);

/// Throws ArgumentError for disconnected input.
CanonicalCode canonical_code(const Forest& tree);

}  // namespace dissoc

template <>
struct std::hash<dissoc::CanonicalCode> {
  std::size_t operator()(const dissoc::CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.code); }
};
