#include "dissoc/kpath.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dissoc/dissociation.hpp"
#include "dissoc/errors.hpp"

namespace dissoc {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

void require_k(std::size_t k, const char* op) {
  if (k < 2) throw ArgumentError(std::string(op) + ": k must be at least 2, got " + std::to_string(k));
}

// BFS distances from `src`; returns the farthest vertex (smallest index on ties).
Vertex bfs_farthest(const Forest& forest, Vertex src, std::vector<std::size_t>& dist) {
  std::fill(dist.begin(), dist.end(), kUnset);
  std::vector<Vertex> queue{src};
  dist[src] = 0;
  Vertex far = src;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
    for (Vertex w : forest.neighbors(v)) {
      if (dist[w] == kUnset) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return far;
}

std::vector<std::uint32_t> adjacency_masks(const Forest& forest) {
  std::vector<std::uint32_t> adj(forest.order(), 0);
  for (const Edge& e : forest.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  return adj;
}

struct Sweep {
  int last = 0;             // a vertex on the deepest BFS level
  std::size_t levels = 0;   // number of BFS levels
  std::uint32_t seen = 0;   // component of the start vertex
};

// Level-by-level BFS restricted to `mask`.
Sweep sweep_within(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int start) {
  Sweep s;
  s.seen = 1U << start;
  std::uint32_t frontier = s.seen;
  while (frontier) {
    ++s.levels;
    s.last = std::countr_zero(frontier);
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= mask & ~s.seen;
    s.seen |= next;
    frontier = next;
  }
  return s;
}

// Longest path order of the subgraph induced by `mask`.
std::size_t induced_longest(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  std::size_t best = 0;
  for (std::uint32_t remaining = mask; remaining;) {
    const Sweep first = sweep_within(adj, mask, std::countr_zero(remaining));
    best = std::max(best, sweep_within(adj, mask, first.last).levels);
    remaining &= ~first.seen;
  }
  return best;
}

std::vector<std::uint32_t> k_path_masks(const Forest& forest, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (const auto& p : all_k_paths(forest, k)) {
    std::uint32_t m = 0;
    for (Vertex v : p) m |= 1U << v;
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::size_t longest_path_order(const Forest& forest) {
  const std::size_t n = forest.order();
  std::vector<std::size_t> dist(n);
  std::vector<bool> done(n, false);
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    const Vertex a = bfs_farthest(forest, s, dist);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] != kUnset) done[v] = true;
    }
    const Vertex b = bfs_farthest(forest, a, dist);
    best = std::max(best, dist[b] + 1);
  }
  return best;
}

std::vector<std::vector<Vertex>> all_k_paths(const Forest& forest, std::size_t k) {
  require_k(k, "all_k_paths");
  const std::size_t n = forest.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[s] = 0;
    parent[s] = kNoVertex;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      if (dist[v] + 1 == k) {
        if (v > s) {
          std::vector<Vertex> path;
          for (Vertex x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
          std::reverse(path.begin(), path.end());
          out.push_back(std::move(path));
        }
        continue;
      }
      for (Vertex w : forest.neighbors(v)) {
        if (dist[w] == kUnset) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_path_family(const Forest& forest, const PathFamily& family) {
  std::vector<bool> used(forest.order(), false);
  for (const auto& p : family.paths) {
    if (p.size() != family.k) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= forest.order() || used[p[i]]) return false;
      used[p[i]] = true;
      if (i > 0 && !forest.has_edge(p[i - 1], p[i])) return false;
    }
  }
  return true;
}

bool is_k_vertex_cover(const Forest& forest, const VertexSet& cover, std::size_t k) {
  require_k(k, "is_k_vertex_cover");
  const Forest rest = forest.isolate(cover);
  return longest_path_order(rest) < k;
}

bool is_valid_certificate(const Forest& forest, const CoverMatchingCertificate& cert) {
  return cert.matching.k == cert.k && cert.cover.capacity() == forest.order() &&
         cert.cover.size() == cert.matching.size() && is_valid_path_family(forest, cert.matching) &&
         is_k_vertex_cover(forest, cert.cover, cert.k);
}

std::size_t alpha_k_brute(const Forest& forest, std::size_t k, std::size_t max_n) {
  require_k(k, "alpha_k_brute");
  const std::size_t n = forest.order();
  if (n > max_n || n > 31) throw GuardError("alpha_k_brute", std::min<std::size_t>(max_n, 31), n);
  const auto adj = adjacency_masks(forest);
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    if (induced_longest(adj, mask) < k) best = size;
  }
  return best;
}

std::size_t alpha_k_dp(const Forest& forest, std::size_t k) {
  require_k(k, "alpha_k_dp");
  const std::size_t n = forest.order();
  // chain lengths above n never occur
  const std::size_t cap = std::min(k - 1, n);
  constexpr long kNone = -1;
  // out[v]: best with v excluded; in[v][d]: v included, longest downward chain
  // through included vertices starting at v has exactly d vertices.
  std::vector<long> out(n, 0);
  std::vector<std::vector<long>> in(n, std::vector<long>(cap + 1, kNone));
  std::vector<bool> done(n, false);
  long total = 0;
  for (Vertex r = 0; r < n; ++r) {
    if (done[r]) continue;
    const RootedView view = root_component(forest, r);
    for (Vertex v : view.pre_order) done[v] = true;
    for (Vertex v : view.post_order) {
      long excluded = 0;
      std::vector<long> cur(cap + 1, kNone);
      if (cap >= 1) cur[1] = 1;
      for (Vertex c : forest.neighbors(v)) {
        if (c == view.parent[v]) continue;
        long child_any = out[c];
        for (std::size_t e = 1; e <= cap; ++e) child_any = std::max(child_any, in[c][e]);
        excluded += child_any;
        std::vector<long> next(cap + 1, kNone);
        for (std::size_t d = 1; d <= cap; ++d) {
          if (cur[d] == kNone) continue;
          next[d] = std::max(next[d], cur[d] + out[c]);
          for (std::size_t e = 1; d + e <= cap; ++e) {
            if (in[c][e] == kNone) continue;
            const std::size_t nd = std::max(d, e + 1);
            next[nd] = std::max(next[nd], cur[d] + in[c][e]);
          }
        }
        cur = std::move(next);
      }
      out[v] = excluded;
      in[v] = std::move(cur);
    }
    long best = out[r];
    for (std::size_t d = 1; d <= cap; ++d) best = std::max(best, in[r][d]);
    total += best;
  }
  return static_cast<std::size_t>(total);
}

std::size_t mu_k_brute(const Forest& forest, std::size_t k, std::size_t max_n) {
  require_k(k, "mu_k_brute");
  const std::size_t n = forest.order();
  if (n > max_n || n > 31) throw GuardError("mu_k_brute", std::min<std::size_t>(max_n, 31), n);
  std::vector<std::vector<std::uint32_t>> by_min(n);
  for (std::uint32_t m : k_path_masks(forest, k)) by_min[static_cast<std::size_t>(std::countr_zero(m))].push_back(m);

  std::size_t best = 0;
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
  auto rec = [&](auto&& self, std::size_t v, std::uint32_t used, std::size_t count) -> void {
    best = std::max(best, count);
    if (v == n) return;
    const std::uint32_t undecided = all & ~used & ~((1U << v) - 1);
    if (count + static_cast<std::size_t>(std::popcount(undecided)) / k <= best) return;
    if (!(used >> v & 1U)) {
      for (std::uint32_t p : by_min[v]) {
        if (!(p & used)) self(self, v + 1, used | p, count + 1);
      }
    }
    self(self, v + 1, used | (1U << v), count);
  };
  rec(rec, 0, 0, 0);
  return best;
}

std::size_t tau_k_brute(const Forest& forest, std::size_t k, std::size_t max_n) {
  require_k(k, "tau_k_brute");
  const std::size_t n = forest.order();
  if (n > max_n || n > 31) throw GuardError("tau_k_brute", std::min<std::size_t>(max_n, 31), n);
  const auto paths = k_path_masks(forest, k);
  auto hits_all = [&](std::uint32_t cover) {
    return std::all_of(paths.begin(), paths.end(), [&](std::uint32_t p) { return (p & cover) != 0; });
  };
  for (std::size_t s = 0; s <= n; ++s) {
    if (s == 0) {
      if (paths.empty()) return 0;
      continue;
    }
    // Gosper's hack over s-subsets of n bits.
    std::uint64_t c = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (c < limit) {
      if (hits_all(static_cast<std::uint32_t>(c))) return s;
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      c = (((ripple ^ c) >> 2) / low) | ripple;
    }
  }
  return n;
}

CoverMatchingCertificate greedy_cover_matching(const Forest& forest, std::size_t k) {
  require_k(k, "greedy_cover_matching");
  const std::size_t n = forest.order();
  CoverMatchingCertificate cert{k, VertexSet(n), PathFamily{k, {}}};
  std::vector<bool> alive(n, true);
  std::vector<Vertex> parent(n);
  std::vector<std::size_t> level(n), chain(n), longest(n);
  std::vector<Vertex> order;

  for (;;) {
    // Root every remaining component at its smallest vertex.
    std::fill(level.begin(), level.end(), kUnset);
    order.clear();
    for (Vertex r = 0; r < n; ++r) {
      if (!alive[r] || level[r] != kUnset) continue;
      level[r] = 0;
      parent[r] = kNoVertex;
      const std::size_t first = order.size();
      order.push_back(r);
      for (std::size_t head = first; head < order.size(); ++head) {
        const Vertex v = order[head];
        for (Vertex w : forest.neighbors(v)) {
          if (alive[w] && level[w] == kUnset) {
            level[w] = level[v] + 1;
            parent[w] = v;
            order.push_back(w);
          }
        }
      }
    }
    // chain[v]: vertices on the longest downward path from v; longest[v]: longest path order inside T_v.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      std::size_t top1 = 0, top2 = 0, inner = 0;
      for (Vertex w : forest.neighbors(v)) {
        if (!alive[w] || w == parent[v]) continue;
        inner = std::max(inner, longest[w]);
        if (chain[w] > top1) {
          top2 = top1;
          top1 = chain[w];
        } else if (chain[w] > top2) {
          top2 = chain[w];
        }
      }
      chain[v] = top1 + 1;
      longest[v] = std::max(inner, top1 + top2 + 1);
    }
    Vertex u = kNoVertex;
    for (Vertex v : order) {
      if (longest[v] < k) continue;
      if (u == kNoVertex || level[v] > level[u] || (level[v] == level[u] && v < u)) u = v;
    }
    if (u == kNoVertex) break;

    // Every k-path of T_u must pass through u.
    for (Vertex w : forest.neighbors(u)) {
      if (alive[w] && w != parent[u] && longest[w] >= k) {
        throw std::logic_error("greedy_cover_matching: child subtree of selected vertex contains a k-path");
      }
    }

    // Downward paths from u, grouped by the child they enter.
    struct Branch {
      Vertex child;
      std::vector<std::vector<Vertex>> by_depth;  // by_depth[d]: endpoints at depth d (d >= 1)
    };
    std::vector<Branch> branches;
    std::vector<Vertex> subtree{u};
    std::vector<std::size_t> depth(n, 0);
    for (Vertex c : forest.neighbors(u)) {
      if (!alive[c] || c == parent[u]) continue;
      Branch b{c, std::vector<std::vector<Vertex>>(k)};
      std::vector<Vertex> stack{c};
      depth[c] = 1;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        subtree.push_back(v);
        if (depth[v] < k) b.by_depth[depth[v]].push_back(v);
        for (Vertex w : forest.neighbors(v)) {
          if (alive[w] && w != parent[v]) {
            depth[w] = depth[v] + 1;
            stack.push_back(w);
          }
        }
      }
      branches.push_back(std::move(b));
    }
    auto up_to_u = [&](Vertex w) {
      std::vector<Vertex> seq;
      for (Vertex x = w; x != u; x = parent[x]) seq.push_back(x);
      return seq;  // w ... child of u
    };
    std::vector<Vertex> best_path;
    auto consider = [&](std::vector<Vertex> seq) {
      if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
      if (best_path.empty() || seq < best_path) best_path = std::move(seq);
    };
    for (const Branch& b : branches) {
      for (Vertex w : b.by_depth[k - 1]) {
        auto seq = up_to_u(w);
        seq.push_back(u);
        consider(std::move(seq));
      }
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
      for (std::size_t j = i + 1; j < branches.size(); ++j) {
        for (std::size_t d1 = 1; d1 + 1 < k; ++d1) {
          const std::size_t d2 = k - 1 - d1;
          for (Vertex a : branches[i].by_depth[d1]) {
            for (Vertex b : branches[j].by_depth[d2]) {
              auto seq = up_to_u(a);
              seq.push_back(u);
              auto tail = up_to_u(b);
              seq.insert(seq.end(), tail.rbegin(), tail.rend());
              consider(std::move(seq));
            }
          }
        }
      }
    }
    if (best_path.size() != k) throw std::logic_error("greedy_cover_matching: no k-path through selected vertex");

    cert.cover.insert(u);
    cert.matching.paths.push_back(std::move(best_path));
    for (Vertex v : subtree) alive[v] = false;
  }
  return cert;
}

KkeReport verify_kke(const Forest& forest, std::size_t k, KkeMode mode) {
  require_k(k, "verify_kke");
  KkeReport r;
  r.k = k;
  r.n = forest.order();
  if (mode == KkeMode::kOracle) {
    r.alpha_k = alpha_k_brute(forest, k);
    r.mu_k = mu_k_brute(forest, k);
  } else {
    r.alpha_k = k == 3 ? alpha3(forest) : alpha_k_dp(forest, k);
    r.mu_k = greedy_cover_matching(forest, k).matching.size();
  }
  r.holds = r.alpha_k + r.mu_k == r.n;
  return r;
}

}  // namespace dissoc
