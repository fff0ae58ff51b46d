#pragma once

#include <random>
#include <vector>

#include "dissoc/forest.hpp"
#include "dissoc/treegen.hpp"

namespace dissoc::fixtures {

inline Forest random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 2) return Forest::path(n);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& x : seq) x = pick(rng);
  return pruefer_decode(seq);
}

// Random tree with each edge kept with probability keep.
inline Forest random_forest(std::size_t n, double keep, std::mt19937_64& rng) {
  const Forest t = random_tree(n, rng);
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> kept;
  for (const Edge& e : t.edges()) {
    if (coin(rng)) kept.push_back(e);
  }
  return Forest::from_edges(n, kept);
}

inline Forest relabel(const Forest& f, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : f.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Forest::from_edges(f.order(), edges);
}

inline std::vector<Forest> trees_up_to(std::size_t n_max) {
  std::vector<Forest> all;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (auto& t : free_trees(n)) all.push_back(std::move(t));
  }
  return all;
}

}  // namespace dissoc::fixtures
