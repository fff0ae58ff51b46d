#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dissoc/count.hpp"
#include "dissoc/dissociation.hpp"
#include "dissoc/forest.hpp"
#include "dissoc/vertex_set.hpp"

namespace dissoc {

/// Two adjacent critical edges end1-middle-end2 (end1 < end2).
struct CriticalTriple {
  Vertex end1 = 0;
  Vertex middle = 0;
  Vertex end2 = 0;

  friend bool operator==(const CriticalTriple&, const CriticalTriple&) = default;
  friend auto operator<=>(const CriticalTriple&, const CriticalTriple&) = default;
};

/// The alpha3-critical edges of a tree grouped into their connected components.
struct CriticalStructure {
  std::vector<Edge> critical_edges;   // sorted
  std::vector<Edge> insulated_edges;  // components with one edge, sorted
  std::vector<CriticalTriple> critical_triples;
  std::size_t eta = 0;  // |critical_edges|
};

/// F_T, A_T, N_T: vertices in some-but-not-all, all, and no maximum dissociation sets.
struct VertexClassification {
  VertexSet flexible;
  VertexSet static_included;
  VertexSet static_excluded;
};

/// Edges whose deletion raises the dissociation number.
std::vector<Edge> critical_edges_alpha3(const Forest& forest);
/// Edges whose deletion lowers the maximum number of disjoint 3-paths (computed by the greedy).
std::vector<Edge> critical_edges_mu3(const Forest& forest);

/// Connected components of the subgraph formed by `edges`, each sorted, ordered by first edge.
std::vector<std::vector<Edge>> edge_components(const std::vector<Edge>& edges);

/// Throws StructureViolation if some critical component has three or more edges.
CriticalStructure critical_structure(const Forest& forest);

/// Classification by forced-membership DP.
VertexClassification classify_vertices(const Forest& forest);
/// Classification read off an explicit list of all maximum dissociation sets.
VertexClassification classify_from_sets(std::size_t n, const std::vector<VertexSet>& all_mds);

/// A_T plus the endpoint farther from `root` of every critical edge. `tree` must be connected.
VertexSet build_canonical_mds(const Forest& tree, Vertex root);
VertexSet build_canonical_mds(const Forest& tree, Vertex root, const VertexClassification& cls,
                              const std::vector<Edge>& critical);

/// 3^x * 2^((flexible - 3x) / 2); nullopt if the exponent is not a non-negative integer.
std::optional<BigCount> mds_count_bound(std::size_t flexible, std::size_t triples);

enum class CheckStatus { kPass, kFail, kSkipped };

std::string to_string(CheckStatus s);

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string witness;  // non-empty exactly when status is kFail
};

struct TheoremReport {
  std::vector<CheckOutcome> checks;

  std::size_t failures() const;
  bool all_hold() const { return failures() == 0; }
  const CheckOutcome* find(const std::string& name) const;
};

struct StructureCheckOptions {
  /// Enumeration-dependent checks run only when the MDS count is at most this.
  std::size_t enumerate_cap = kDefaultEnumerationCap;
};

/// Runs every structural check on a tree and reports each one separately.
/// Checks that need the explicit list of maximum dissociation sets are
/// reported as skipped when the count exceeds the cap.
TheoremReport verify_structure_theorems(const Forest& tree, const StructureCheckOptions& options = {});

}  // namespace dissoc
