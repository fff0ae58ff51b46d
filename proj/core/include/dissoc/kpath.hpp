#pragma once

#include <cstddef>
#include <vector>

#include "dissoc/forest.hpp"
#include "dissoc/vertex_set.hpp"

namespace dissoc {

/// Vertex-disjoint k-paths, each listed as its vertex sequence.
struct PathFamily {
  std::size_t k = 0;
  std::vector<std::vector<Vertex>> paths;

  std::size_t size() const noexcept { return paths.size(); }
};

/// A k-vertex cover and a k-matching of equal size; together they certify
/// tau_k = mu_k for the forest.
struct CoverMatchingCertificate {
  std::size_t k = 0;
  VertexSet cover;
  PathFamily matching;
};

/// Number of vertices on a longest path; 0 for the empty forest.
std::size_t longest_path_order(const Forest& forest);

/// Every pair of vertices at distance k-1, as the vertex sequence of the
/// unique path between them (first vertex < last vertex), sorted.
std::vector<std::vector<Vertex>> all_k_paths(const Forest& forest, std::size_t k);

bool is_valid_path_family(const Forest& forest, const PathFamily& family);
bool is_k_vertex_cover(const Forest& forest, const VertexSet& cover, std::size_t k);
/// Checks the certificate's structure: valid cover, valid matching, equal sizes.
bool is_valid_certificate(const Forest& forest, const CoverMatchingCertificate& cert);

inline constexpr std::size_t kAlphaBruteLimit = 26;
inline constexpr std::size_t kMuBruteLimit = 18;
inline constexpr std::size_t kTauBruteLimit = 26;

/// Largest S whose induced subgraph has no path on k vertices, by subset search.
std::size_t alpha_k_brute(const Forest& forest, std::size_t k, std::size_t max_n = kAlphaBruteLimit);
/// Same quantity by a rooted DP over longest induced downward chains; O(n k^2).
std::size_t alpha_k_dp(const Forest& forest, std::size_t k);
/// Maximum number of vertex-disjoint k-paths, by backtracking.
std::size_t mu_k_brute(const Forest& forest, std::size_t k, std::size_t max_n = kMuBruteLimit);
/// Minimum k-vertex cover size, testing subsets in order of increasing size.
std::size_t tau_k_brute(const Forest& forest, std::size_t k, std::size_t max_n = kTauBruteLimit);

/// Deepest-subtree greedy. In each component rooted at its smallest vertex,
/// select the deepest vertex u (ties: smallest index) whose subtree contains
/// a k-path, put u in the cover and the lexicographically smallest k-path
/// through u in the matching, then delete the subtree of u. Repeats until no
/// k-path remains.
CoverMatchingCertificate greedy_cover_matching(const Forest& forest, std::size_t k);

enum class KkeMode {
  kOracle,  // alpha_k and mu_k by exhaustive search
  kFast,    // alpha_k by tree DP, mu_k from the greedy certificate
};

struct KkeReport {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t alpha_k = 0;
  std::size_t mu_k = 0;
  bool holds = false;  // alpha_k + mu_k == n
};

KkeReport verify_kke(const Forest& forest, std::size_t k, KkeMode mode = KkeMode::kFast);

}  // namespace dissoc
