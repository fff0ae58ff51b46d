#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dissoc/count.hpp"
#include "dissoc/forest.hpp"
#include "dissoc/vertex_set.hpp"

namespace dissoc {

/// Dissociation number and number of maximum dissociation sets.
struct DissociationResult {
  std::size_t alpha3 = 0;
  BigCount count = 1;
};

/// Best size and number of ways attaining it. An unattainable record has
/// `size == kInfeasible` and zero ways.
template <typename Count>
struct Tally {
  static constexpr std::int64_t kInfeasible = INT64_MIN / 4;

  std::int64_t size = kInfeasible;
  Count ways{};

  bool feasible() const { return size != kInfeasible; }
};

/// Per-vertex records of the rooted tree DP, restricted to the subtree.
///   excluded:           v not in the set
///   included_unmatched: v in the set, no child in the set
///   included_matched:   v in the set together with exactly one child
template <typename Count>
struct DpState {
  Tally<Count> excluded;
  Tally<Count> included_unmatched;
  Tally<Count> included_matched;
};

/// Induced subgraph on `s` has maximum degree at most 1.
bool is_dissociation_set(const Forest& forest, const VertexSet& s);

/// Linear-time DP over each component; counts in arbitrary precision.
DissociationResult alpha3_count_dp(const Forest& forest);

struct FixedDissociationResult {
  std::size_t alpha3 = 0;
  std::uint64_t count = 1;
};
/// Same DP on 64-bit counts; throws OverflowError rather than wrapping.
FixedDissociationResult alpha3_count_dp_fixed(const Forest& forest);

/// Size-only DP.
std::size_t alpha3(const Forest& forest);

/// DP records for the component rooted by `view` (other vertices untouched).
std::vector<DpState<BigCount>> dissociation_states(const Forest& forest, const RootedView& view);

/// Largest dissociation set containing all of `include` and none of
/// `exclude`; nullopt when `include` is not itself a dissociation set.
/// Throws ArgumentError when the two sets overlap.
std::optional<std::size_t> alpha3_forced(const Forest& forest, const VertexSet& include, const VertexSet& exclude);

struct BruteForceMds {
  std::size_t alpha3 = 0;
  std::vector<VertexSet> sets;  // lexicographic
};

inline constexpr std::size_t kBruteForceLimit = 26;

/// Tests all 2^n subsets. Throws GuardError above `max_n`.
BruteForceMds brute_force_mds(const Forest& forest, std::size_t max_n = kBruteForceLimit);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Streams every maximum dissociation set once, in lexicographic order, to
/// `sink`. Returning false from `sink` stops early. Throws TruncationError
/// when more than `cap` sets would be emitted.
void for_each_mds(const Forest& forest, const std::function<bool(const VertexSet&)>& sink,
                  std::size_t cap = kDefaultEnumerationCap);

std::vector<VertexSet> enumerate_mds(const Forest& forest, std::size_t cap = kDefaultEnumerationCap);

}  // namespace dissoc
