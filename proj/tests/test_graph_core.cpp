#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dissoc/canonical.hpp"
#include "dissoc/errors.hpp"
#include "dissoc/extremal.hpp"
#include "dissoc/forest.hpp"
#include "dissoc/treegen.hpp"
#include "support.hpp"

using namespace dissoc;

namespace {

std::set<std::pair<std::string, std::string>> label_edges(const Forest& f) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : f.edges()) {
    auto a = f.label(e.u), b = f.label(e.v);
    if (b < a) std::swap(a, b);
    out.emplace(a, b);
  }
  return out;
}

// Exhaustive permutation search.
bool isomorphic(const Forest& a, const Forest& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = a.degree_sequence(), db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Parse, PathOnThreeLabels) {
  const Forest f = parse_edge_list("a b\nb c");
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(f.label(0), "a");
  EXPECT_EQ(f.label(2), "c");
}

TEST(Parse, CycleNamesLine) {
  try {
    parse_edge_list("1 2\n2 3\n3 1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Parse, RejectsMalformedLines) {
  EXPECT_THROW(parse_edge_list("a b c"), ParseError);
  EXPECT_THROW(parse_edge_list("a a"), ParseError);
  EXPECT_THROW(parse_edge_list("a b\nb a"), ParseError);
  EXPECT_THROW(parse_edge_list("lonely"), ParseError);
}

TEST(Parse, CommentsBlanksAndIsolatedVertices) {
  const Forest f = parse_edge_list("# header\n\nx y  # trailing\nvertex z\n   \n");
  EXPECT_EQ(f.order(), 3u);
  EXPECT_EQ(f.edge_count(), 1u);
  EXPECT_EQ(f.label(2), "z");
  EXPECT_EQ(f.degree(2), 0u);
}

TEST(Parse, LabeledLt8) {
  const Forest f = parse_edge_list("u1 u2\nu2 u3\nu3 u4\nu1 v1\nu2 v2\nu3 v3\nu4 v4");
  EXPECT_EQ(f.order(), 8u);
  EXPECT_TRUE(f.is_tree());
  EXPECT_EQ(canonical_code(f), canonical_code(lt8()));
  EXPECT_TRUE(isomorphic(f, lt8()));
}

TEST(Parse, SerializeRoundTripOnRandomForests) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 30;
    const Forest f = fixtures::random_forest(n, 0.7, rng);
    const std::string text = serialize_edge_list(f);
    const Forest g = parse_edge_list(text);
    ASSERT_EQ(g.order(), f.order());
    EXPECT_EQ(label_edges(g), label_edges(f));
    EXPECT_EQ(serialize_edge_list(parse_edge_list(serialize_edge_list(g))), serialize_edge_list(g));
  }
}

TEST(Forest, FromEdgesValidates) {
  const std::vector<Edge> loop{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(Forest::from_edges(3, loop), ArgumentError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Forest::from_edges(2, dup), ArgumentError);
  const std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Forest::from_edges(3, out_of_range), ArgumentError);
}

TEST(Forest, AdjacencySortedAndConsistent) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const Forest f = fixtures::random_forest(1 + rng() % 40, 0.8, rng);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < f.order(); ++v) {
      auto nb = f.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) EXPECT_TRUE(f.has_edge(v, w));
      degree_sum += nb.size();
    }
    EXPECT_EQ(degree_sum, 2 * f.edge_count());
  }
}

TEST(RootAt, PathLevels) {
  EXPECT_EQ(root_at(Forest::path(3), 1).level, (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(root_at(Forest::path(4), 0).level, (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(RootAt, Lt8FromSecondSpine) {
  const RootedView view = root_at(lt8(), 1);
  EXPECT_EQ(view.level[7], 3u);
}

TEST(RootAt, RejectsDisconnected) {
  const std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(root_at(Forest::from_edges(3, e), 0), ArgumentError);
  EXPECT_NO_THROW(root_component(Forest::from_edges(3, e), 0));
}

TEST(RootAt, OrdersAndLevelsConsistent) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const Forest t = fixtures::random_tree(1 + rng() % 50, rng);
    const Vertex r = static_cast<Vertex>(rng() % t.order());
    const RootedView view = root_at(t, r);
    EXPECT_EQ(view.level[r], 0u);
    EXPECT_EQ(view.parent[r], kNoVertex);
    std::vector<std::size_t> pos(t.order());
    for (std::size_t i = 0; i < view.post_order.size(); ++i) pos[view.post_order[i]] = i;
    for (Vertex v = 0; v < t.order(); ++v) {
      if (v == r) continue;
      EXPECT_EQ(view.level[v], view.level[view.parent[v]] + 1);
      EXPECT_LT(pos[v], pos[view.parent[v]]);
    }
  }
}

TEST(Canonical, RelabelingInvariance) {
  const std::vector<Edge> e{{3, 0}, {0, 2}, {2, 1}};
  EXPECT_EQ(canonical_code(Forest::path(4)), canonical_code(Forest::from_edges(4, e)));
  EXPECT_NE(canonical_code(Forest::path(4)), canonical_code(Forest::star(3)));
  EXPECT_THROW(canonical_code(Forest::from_edges(3, std::vector<Edge>{{0, 1}})), ArgumentError);
}

TEST(Canonical, RandomPermutationsKeepCode) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const Forest t = fixtures::random_tree(1 + rng() % 40, rng);
    std::vector<Vertex> perm(t.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(t), canonical_code(fixtures::relabel(t, perm)));
  }
}

TEST(Canonical, AgreesWithPermutationOracleUpToEight) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trees = free_trees(n);
    std::mt19937_64 rng(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Forest shuffled = fixtures::relabel(trees[i], perm);
      for (std::size_t j = 0; j < trees.size(); ++j) {
        const bool same_code = canonical_code(shuffled) == canonical_code(trees[j]);
        ASSERT_EQ(same_code, isomorphic(shuffled, trees[j])) << "n=" << n << " i=" << i << " j=" << j;
      }
    }
  }
}

TEST(Canonical, PrueferClassCounts) {
  const std::vector<std::size_t> classes{1, 1, 1, 2, 3, 6, 11};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<CanonicalCode> codes;
    for_each_labeled_tree(n, [&](const Forest& t) { codes.insert(canonical_code(t)); });
    EXPECT_EQ(codes.size(), classes[n - 1]) << "n=" << n;
  }
}

TEST(Canonical, CentroidComponentSizesRootIndependent) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    const Forest t = fixtures::random_tree(2 + rng() % 25, rng);
    const Vertex c = centroids(t).front();
    std::vector<std::size_t> reference;
    for (Vertex r = 0; r < t.order(); ++r) {
      const RootedView view = root_at(t, r);
      std::vector<std::size_t> size(t.order(), 1);
      for (Vertex v : view.post_order) {
        if (view.parent[v] != kNoVertex) size[view.parent[v]] += size[v];
      }
      std::vector<std::size_t> parts;
      for (Vertex w : t.neighbors(c)) parts.push_back(view.parent[w] == c ? size[w] : t.order() - size[c]);
      std::sort(parts.begin(), parts.end());
      if (r == 0) reference = parts;
      EXPECT_EQ(parts, reference);
      for (std::size_t p : parts) EXPECT_LE(2 * p, t.order());
    }
  }
}

TEST(VertexSet, BasicOperations) {
  VertexSet a(100, {1, 64, 99});
  VertexSet b(100, {64});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  a -= b;
  EXPECT_FALSE(a.contains(64));
  EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 99}));
  EXPECT_THROW(a.insert(100), ArgumentError);
  EXPECT_THROW(a |= VertexSet(5), ArgumentError);
  EXPECT_LT(VertexSet(3, {0, 1}), VertexSet(3, {0, 2}));
}
