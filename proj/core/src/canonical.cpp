#include "dissoc/canonical.hpp"

#include <algorithm>

#include "dissoc/errors.hpp"

namespace dissoc {

std::vector<Vertex> centroids(const Forest& tree) {
  if (!tree.is_tree()) throw ArgumentError("centroids: input is not a tree");
  const std::size_t n = tree.order();
  const RootedView view = root_at(tree, 0);
  std::vector<std::size_t> subtree(n, 1);
  for (Vertex v : view.post_order) {
    if (view.parent[v] != kNoVertex) subtree[view.parent[v]] += subtree[v];
  }
  std::vector<Vertex> out;
  std::size_t best = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t heaviest = n - subtree[v];
    for (Vertex w : tree.neighbors(v)) {
      if (w != view.parent[v]) heaviest = std::max(heaviest, subtree[w]);
    }
    if (heaviest < best) {
      best = heaviest;
      out.assign(1, v);
    } else if (heaviest == best) {
      out.push_back(v);
    }
  }
  return out;
}

std::string rooted_code(const Forest& tree, Vertex root) {
  const RootedView view = root_at(tree, root);
  std::vector<std::string> code(tree.order());
  std::vector<std::string> kids;
  for (Vertex v : view.post_order) {
    kids.clear();
    for (Vertex w : tree.neighbors(v)) {
      if (w != view.parent[v]) kids.push_back(std::move(code[w]));
    }
    std::sort(kids.begin(), kids.end());
    std::string& out = code[v];
    out.push_back('(');
    for (const auto& k : kids) out += k;
    out.push_back(')');
  }
  return std::move(code[root]);
}

CanonicalCode canonical_code(const Forest& tree) {
  if (!tree.is_tree()) throw ArgumentError("canonical_code: input is not connected");
  const auto cs = centroids(tree);
  std::string best = rooted_code(tree, cs.front());
  if (cs.size() == 2) best = std::min(best, rooted_code(tree, cs.back()));
  return CanonicalCode{std::move(best)};
}

}  // namespace dissoc
