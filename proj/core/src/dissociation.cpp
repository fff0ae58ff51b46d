#include "dissoc/dissociation.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

// Ways semiring that discards counts.
struct NoCount {
  NoCount() = default;
  explicit NoCount(int) {}
  friend NoCount operator+(NoCount, NoCount) { return {}; }
  friend NoCount operator*(NoCount, NoCount) { return {}; }
};

template <typename Count>
Tally<Count> unit() {
  return Tally<Count>{0, Count(1)};
}

template <typename Count>
Tally<Count> plus(const Tally<Count>& a, const Tally<Count>& b) {
  if (!a.feasible()) return b;
  if (!b.feasible()) return a;
  if (a.size > b.size) return a;
  if (b.size > a.size) return b;
  return Tally<Count>{a.size, a.ways + b.ways};
}

template <typename Count>
Tally<Count> times(const Tally<Count>& a, const Tally<Count>& b) {
  if (!a.feasible() || !b.feasible()) return Tally<Count>{};
  return Tally<Count>{a.size + b.size, a.ways * b.ways};
}

template <typename Count>
Tally<Count> best_of(const DpState<Count>& s) {
  return plus(plus(s.excluded, s.included_unmatched), s.included_matched);
}

enum class Force : std::uint8_t { kFree, kInclude, kExclude };

// Fills `states` for every vertex of the component rooted by `view`.
template <typename Count>
void run_dp(const Forest& forest, const RootedView& view, const std::vector<Force>* force,
            std::vector<DpState<Count>>& states) {
  for (Vertex v : view.post_order) {
    Tally<Count> all_children = unit<Count>();
    Tally<Count> children_out = unit<Count>();
    Tally<Count> one_partner;  // exactly one child included-unmatched, rest excluded
    for (Vertex c : forest.neighbors(v)) {
      if (c == view.parent[v]) continue;
      const DpState<Count>& cs = states[c];
      all_children = times(all_children, best_of(cs));
      one_partner = plus(times(one_partner, cs.excluded), times(children_out, cs.included_unmatched));
      children_out = times(children_out, cs.excluded);
    }
    const Tally<Count> self{1, Count(1)};
    DpState<Count>& st = states[v];
    st.excluded = all_children;
    st.included_unmatched = times(self, children_out);
    st.included_matched = times(self, one_partner);
    if (force) {
      if ((*force)[v] == Force::kInclude) st.excluded = Tally<Count>{};
      if ((*force)[v] == Force::kExclude) {
        st.included_unmatched = Tally<Count>{};
        st.included_matched = Tally<Count>{};
      }
    }
  }
}

template <typename Count>
Tally<Count> solve_forest(const Forest& forest, const std::vector<Force>* force) {
  std::vector<DpState<Count>> states(forest.order());
  Tally<Count> total = unit<Count>();
  std::vector<bool> done(forest.order(), false);
  for (Vertex r = 0; r < forest.order(); ++r) {
    if (done[r]) continue;
    const RootedView view = root_component(forest, r);
    for (Vertex v : view.pre_order) done[v] = true;
    run_dp<Count>(forest, view, force, states);
    total = times(total, best_of(states[r]));
  }
  return total;
}

}  // namespace

bool is_dissociation_set(const Forest& forest, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok || v >= forest.order()) return;
    std::size_t inside = 0;
    for (Vertex w : forest.neighbors(v)) inside += s.contains(w) ? 1 : 0;
    if (inside > 1) ok = false;
  });
  return ok;
}

DissociationResult alpha3_count_dp(const Forest& forest) {
  const auto t = solve_forest<BigCount>(forest, nullptr);
  return DissociationResult{static_cast<std::size_t>(t.size), t.ways};
}

FixedDissociationResult alpha3_count_dp_fixed(const Forest& forest) {
  const auto t = solve_forest<CheckedCount>(forest, nullptr);
  return FixedDissociationResult{static_cast<std::size_t>(t.size), t.ways.value()};
}

std::size_t alpha3(const Forest& forest) {
  return static_cast<std::size_t>(solve_forest<NoCount>(forest, nullptr).size);
}

std::vector<DpState<BigCount>> dissociation_states(const Forest& forest, const RootedView& view) {
  std::vector<DpState<BigCount>> states(forest.order());
  run_dp<BigCount>(forest, view, nullptr, states);
  return states;
}

std::optional<std::size_t> alpha3_forced(const Forest& forest, const VertexSet& include, const VertexSet& exclude) {
  if (include.intersects(exclude)) throw ArgumentError("alpha3_forced: include and exclude overlap");
  if (include.capacity() != forest.order()) throw ArgumentError("alpha3_forced: set capacity mismatch");
  std::vector<Force> force(forest.order(), Force::kFree);
  include.for_each([&](Vertex v) { force[v] = Force::kInclude; });
  exclude.for_each([&](Vertex v) { force[v] = Force::kExclude; });
  const auto t = solve_forest<NoCount>(forest, &force);
  if (!t.feasible()) return std::nullopt;
  return static_cast<std::size_t>(t.size);
}

BruteForceMds brute_force_mds(const Forest& forest, std::size_t max_n) {
  const std::size_t n = forest.order();
  if (n > max_n || n > 31) throw GuardError("brute_force_mds", std::min<std::size_t>(max_n, 31), n);
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : forest.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  BruteForceMds out;
  std::vector<std::uint32_t> best_masks;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size < out.alpha3) continue;
    bool ok = true;
    for (std::uint32_t rest = mask; rest && ok; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      ok = std::popcount(adj[static_cast<std::size_t>(v)] & mask) <= 1;
    }
    if (!ok) continue;
    if (size > out.alpha3) {
      out.alpha3 = size;
      best_masks.clear();
    }
    best_masks.push_back(mask);
  }
  for (std::uint32_t mask : best_masks) {
    VertexSet s(n);
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) s.insert(static_cast<Vertex>(std::countr_zero(rest)));
    out.sets.push_back(std::move(s));
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

void for_each_mds(const Forest& forest, const std::function<bool(const VertexSet&)>& sink, std::size_t cap) {
  const std::size_t n = forest.order();
  const std::size_t target = alpha3(forest);
  VertexSet include(n);
  VertexSet exclude(n);
  std::size_t emitted = 0;
  bool stop = false;

  auto still_optimal = [&]() {
    const auto best = alpha3_forced(forest, include, exclude);
    return best && *best == target;
  };

  // Include-before-exclude at each vertex yields lexicographic order, since all
  // emitted sets share one cardinality.
  std::function<void(Vertex)> descend = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      if (++emitted > cap) throw TruncationError(cap);
      if (!sink(include)) stop = true;
      return;
    }
    include.insert(v);
    if (still_optimal()) descend(v + 1);
    include.erase(v);
    if (stop) return;
    exclude.insert(v);
    if (still_optimal()) descend(v + 1);
    exclude.erase(v);
  };
  descend(0);
}

std::vector<VertexSet> enumerate_mds(const Forest& forest, std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_mds(
      forest,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

}  // namespace dissoc
