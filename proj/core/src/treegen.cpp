#include "dissoc/treegen.hpp"

#include <algorithm>
#include <exception>
#include <queue>
#include <thread>

#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

using Layout = std::vector<std::uint32_t>;

// Left subtree of the root (levels shifted down by one) and the remainder.
void split_tree(const Layout& layout, Layout& left, Layout& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Rooted-tree successor; nullopt after the last tree. `p` is the position to
// advance, or npos for the rightmost vertex above level 1.
std::optional<Layout> next_rooted_tree(const Layout& pred, std::size_t p = static_cast<std::size_t>(-1)) {
  if (p == static_cast<std::size_t>(-1)) {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

bool is_centred(const Layout& layout, Layout& left, Layout& rest) {
  split_tree(layout, left, rest);
  const auto lh = *std::max_element(left.begin(), left.end());
  const auto rh = *std::max_element(rest.begin(), rest.end());
  if (rh < lh) return false;
  if (rh == lh) {
    if (left.size() > rest.size()) return false;
    if (left.size() == rest.size() && left > rest) return false;
  }
  return true;
}

// Returns `candidate` if it is rooted at its centre, otherwise jumps past the
// block of non-centred rooted trees that share its left subtree.
std::optional<Layout> next_free_tree(Layout candidate) {
  Layout left, rest;
  if (is_centred(candidate, left, rest)) return candidate;
  const std::size_t p = left.size();
  auto jumped = next_rooted_tree(candidate, p);
  if (jumped && candidate[p] > 2) {
    Layout new_left, new_rest;
    split_tree(*jumped, new_left, new_rest);
    const std::size_t len = *std::max_element(new_left.begin(), new_left.end()) + 1;
    for (std::size_t i = 0; i < len; ++i) (*jumped)[jumped->size() - len + i] = static_cast<std::uint32_t>(1 + i);
  }
  return jumped;
}

}  // namespace

Forest forest_from_levels(const LevelSequence& levels) {
  const auto& seq = levels.seq;
  if (seq.empty()) return Forest::from_edges(0, {});
  if (seq[0] != 1) throw ArgumentError("level sequence must start at level 1");
  std::vector<Edge> edges;
  std::vector<Vertex> stack{0};  // stack[d-1]: latest vertex at level d
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const std::uint32_t l = seq[i];
    if (l < 2 || l > stack.size() + 1) throw ArgumentError("invalid level sequence");
    stack.resize(l - 1);
    edges.emplace_back(stack.back(), static_cast<Vertex>(i));
    stack.push_back(static_cast<Vertex>(i));
  }
  return Forest::from_edges(seq.size(), edges);
}

FreeTreeGenerator::FreeTreeGenerator(std::size_t n) : n_(n) {
  if (n == 0) throw ArgumentError("free trees need at least one vertex");
  // Path rooted at its centre.
  for (std::size_t i = 0; i <= n / 2; ++i) layout_.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout_.push_back(static_cast<std::uint32_t>(i));
}

bool FreeTreeGenerator::next() {
  if (done_) return false;
  std::optional<Layout> cand;
  if (!started_) {
    cand = layout_;
  } else if (n_ > 2) {
    cand = next_rooted_tree(layout_);
  }
  // Orders 1 and 2 have a single tree and no centring step.
  if (cand && n_ > 2) cand = next_free_tree(std::move(*cand));
  if (!cand) {
    done_ = true;
    return false;
  }
  if (started_) ++index_;
  started_ = true;
  layout_ = std::move(*cand);
  current_.seq.resize(layout_.size());
  std::transform(layout_.begin(), layout_.end(), current_.seq.begin(), [](std::uint32_t l) { return l + 1; });
  return true;
}

std::vector<Forest> free_trees(std::size_t n) {
  std::vector<Forest> out;
  FreeTreeGenerator gen(n);
  while (gen.next()) out.push_back(gen.tree());
  return out;
}

std::uint64_t count_free_trees(std::size_t n) {
  std::uint64_t c = 0;
  FreeTreeGenerator gen(n);
  while (gen.next()) ++c;
  return c;
}

void for_each_free_tree(std::size_t n, std::uint64_t begin, std::uint64_t end,
                        const std::function<void(std::uint64_t, const Forest&)>& fn) {
  FreeTreeGenerator gen(n);
  for (std::uint64_t i = 0; i < end && gen.next(); ++i) {
    if (i >= begin) fn(i, gen.tree());
  }
}

void parallel_for_each_free_tree(std::size_t n, std::size_t jobs,
                                 const std::function<void(std::size_t, std::uint64_t, const Forest&)>& fn) {
  jobs = std::max<std::size_t>(jobs, 1);
  if (jobs == 1) {
    for_each_free_tree(n, 0, UINT64_MAX, [&](std::uint64_t i, const Forest& t) { fn(0, i, t); });
    return;
  }
  const std::uint64_t total = count_free_trees(n);
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    workers.emplace_back([&, w, lo, hi] {
      try {
        for_each_free_tree(n, lo, hi, [&](std::uint64_t i, const Forest& t) { fn(w, i, t); });
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Forest pruefer_decode(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : seq) {
    if (v >= n) throw ArgumentError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : seq) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Forest::from_edges(n, edges);
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Forest&)>& fn, std::size_t max_n) {
  if (n == 0) throw ArgumentError("labeled trees need at least one vertex");
  if (n > max_n) throw GuardError("labeled_trees_pruefer", max_n, n);
  if (n == 1) {
    fn(Forest::from_edges(1, {}));
    return;
  }
  std::vector<Vertex> seq(n - 2, 0);
  for (;;) {
    fn(pruefer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
}

std::vector<Forest> labeled_trees_pruefer(std::size_t n, std::size_t max_n) {
  std::vector<Forest> out;
  for_each_labeled_tree(n, [&](const Forest& t) { out.push_back(t); }, max_n);
  return out;
}

}  // namespace dissoc
