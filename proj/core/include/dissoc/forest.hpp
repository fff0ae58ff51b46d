#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/vertex_set.hpp"

namespace dissoc {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple acyclic undirected graph on vertices 0..n-1.
///
/// Construction validates the forest invariants (no loops, no parallel edges,
/// no cycles). Adjacency lists are sorted ascending and the edge list is sorted
/// by (u, v). Optional string labels are kept for reporting only; every
/// algorithm works on the dense indices.
class Forest {
 public:
  Forest() = default;

  /// Throws ArgumentError if the edges do not describe a forest on `n` vertices.
  static Forest from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  static Forest path(std::size_t n);
  static Forest star(std::size_t leaves);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex a, Vertex b) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Original label, or the decimal index when the forest is unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// True for a connected forest with at least one vertex.
  bool is_tree() const;

  /// Vertex sets of the connected components, each ascending, ordered by smallest member.
  std::vector<std::vector<Vertex>> components() const;

  /// Same vertex set, one edge removed.
  Forest without_edge(const Edge& e) const;
  /// Same vertex set; every edge touching `removed` is dropped (those vertices become isolated).
  Forest isolate(const VertexSet& removed) const;
  /// Subgraph induced by `keep`, renumbered densely in ascending order; labels carried over.
  Forest induced(std::span<const Vertex> keep) const;

  std::vector<std::size_t> degree_sequence() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

/// Parses the edge-list text format: one "u v" pair per line, "#" starts a
/// comment, "vertex u" declares a (possibly isolated) vertex. Labels are
/// mapped to indices in first-appearance order.
Forest parse_edge_list(std::string_view text);

/// Edges sorted by index pair printed as "label label", followed by
/// "vertex label" for each isolated vertex.
std::string serialize_edge_list(const Forest& forest);

/// A component rooted at one vertex.
struct RootedView {
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  Vertex root = kNoVertex;
  std::vector<Vertex> parent;        // kNoVertex for the root and for unreached vertices
  std::vector<std::uint32_t> level;  // kUnreached outside the root's component
  std::vector<Vertex> pre_order;     // BFS order from the root; parents before children
  std::vector<Vertex> post_order;    // children before parents

  bool reached(Vertex v) const { return level[v] != kUnreached; }
};

/// Roots the whole forest, which must be a tree. Throws ArgumentError otherwise.
RootedView root_at(const Forest& tree, Vertex root);
/// Roots only the component containing `root`; other vertices stay unreached.
RootedView root_component(const Forest& forest, Vertex root);

}  // namespace dissoc
