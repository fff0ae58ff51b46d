#include "dissoc/forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }
  void grow() { parent_.push_back(parent_.size()); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Forest Forest::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) throw ArgumentError("label count does not match vertex count");
  Forest f;
  f.n_ = n;
  f.edges_.assign(edges.begin(), edges.end());
  std::sort(f.edges_.begin(), f.edges_.end());
  DisjointSets dsu(n);
  for (std::size_t i = 0; i < f.edges_.size(); ++i) {
    const Edge& e = f.edges_[i];
    if (e.v >= n) throw ArgumentError("edge endpoint out of range");
    if (e.u == e.v) throw ArgumentError("self-loop at vertex " + std::to_string(e.u));
    if (i > 0 && f.edges_[i - 1] == e) {
      throw ArgumentError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (!dsu.unite(e.u, e.v)) {
      throw ArgumentError("cycle through edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : f.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  f.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) f.offsets_[v + 1] = f.offsets_[v] + deg[v];
  f.adjacency_.assign(f.offsets_[n], 0);
  std::vector<std::size_t> fill(f.offsets_.begin(), f.offsets_.end() - 1);
  for (const Edge& e : f.edges_) {
    f.adjacency_[fill[e.u]++] = e.v;
    f.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(f.adjacency_.begin() + static_cast<std::ptrdiff_t>(f.offsets_[v]),
              f.adjacency_.begin() + static_cast<std::ptrdiff_t>(f.offsets_[v + 1]));
  }
  f.labels_ = std::move(labels);
  return f;
}

Forest Forest::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return from_edges(n, edges);
}

Forest Forest::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return from_edges(leaves + 1, edges);
}

bool Forest::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::string Forest::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool Forest::is_tree() const { return n_ >= 1 && edges_.size() == n_ - 1; }

std::vector<std::vector<Vertex>> Forest::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Forest Forest::without_edge(const Edge& e) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& x : edges_) {
    if (x != e) kept.push_back(x);
  }
  return from_edges(n_, kept, labels_);
}

Forest Forest::isolate(const VertexSet& removed) const {
  std::vector<Edge> kept;
  for (const Edge& x : edges_) {
    if (!removed.contains(x.u) && !removed.contains(x.v)) kept.push_back(x);
  }
  return from_edges(n_, kept, labels_);
}

Forest Forest::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> index(n_, kNoVertex);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> kept;
  for (const Edge& x : edges_) {
    if (index[x.u] != kNoVertex && index[x.v] != kNoVertex) kept.emplace_back(index[x.u], index[x.v]);
  }
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    for (Vertex v : sorted) labels.push_back(labels_[v]);
  }
  return from_edges(sorted.size(), kept, std::move(labels));
}

std::vector<std::size_t> Forest::degree_sequence() const {
  std::vector<std::size_t> out(n_);
  for (Vertex v = 0; v < n_; ++v) out[v] = degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

Forest parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> edge_line;
  DisjointSets dsu(0);

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) {
      labels.push_back(label);
      dsu.grow();
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two tokens, found " + std::to_string(tokens.size()));
    }
    if (tokens[0] == "vertex") {
      intern(tokens[1]);
    } else {
      if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop at '" + tokens[0] + "'");
      const Vertex a = intern(tokens[0]);
      const Vertex b = intern(tokens[1]);
      const Edge e(a, b);
      if (const auto seen = edge_line.find(e); seen != edge_line.end()) {
        throw ParseError(line_no, "duplicate edge '" + tokens[0] + " " + tokens[1] + "' (first on line " +
                                      std::to_string(seen->second) + ")");
      }
      if (!dsu.unite(a, b)) {
        throw ParseError(line_no, "edge '" + tokens[0] + " " + tokens[1] + "' closes a cycle");
      }
      edges.push_back(e);
      edge_line.emplace(e, line_no);
    }
    if (eol == text.size()) break;
  }
  const std::size_t n = labels.size();
  return Forest::from_edges(n, edges, std::move(labels));
}

std::string serialize_edge_list(const Forest& forest) {
  // Parsing interns labels in first-appearance order; declare any vertex that
  // would otherwise first appear out of index order so indices survive a round trip.
  std::string out;
  Vertex next = 0;
  auto declare_below = [&](Vertex limit) {
    for (; next < limit; ++next) {
      out += "vertex ";
      out += forest.label(next);
      out += '\n';
    }
  };
  for (const Edge& e : forest.edges()) {
    if (e.v >= next) declare_below(e.u >= next && e.v == e.u + 1 ? e.u : e.v);
    out += forest.label(e.u);
    out += ' ';
    out += forest.label(e.v);
    out += '\n';
    next = std::max<Vertex>(next, e.v + 1);
  }
  declare_below(static_cast<Vertex>(forest.order()));
  return out;
}

RootedView root_component(const Forest& forest, Vertex root) {
  const std::size_t n = forest.order();
  if (root >= n) throw ArgumentError("root " + std::to_string(root) + " out of range");
  RootedView view;
  view.root = root;
  view.parent.assign(n, kNoVertex);
  view.level.assign(n, RootedView::kUnreached);
  view.level[root] = 0;
  view.pre_order.push_back(root);
  for (std::size_t head = 0; head < view.pre_order.size(); ++head) {
    const Vertex v = view.pre_order[head];
    for (Vertex w : forest.neighbors(v)) {
      if (view.level[w] == RootedView::kUnreached) {
        view.level[w] = view.level[v] + 1;
        view.parent[w] = v;
        view.pre_order.push_back(w);
      }
    }
  }
  view.post_order.assign(view.pre_order.rbegin(), view.pre_order.rend());
  return view;
}

RootedView root_at(const Forest& tree, Vertex root) {
  RootedView view = root_component(tree, root);
  if (view.pre_order.size() != tree.order()) throw ArgumentError("root_at: forest is not connected");
  return view;
}

}  // namespace dissoc
