#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "groupobs/graph.hpp"

namespace groupobs::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.push_back(make_edge(i, static_cast<NodeId>((i + 1) % n)));
  return Graph::from_edges(n, e);
}

// Node 0 is the center.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 1; i < n; ++i) e.push_back({0, i});
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

// Independent coin-flip G(n, p) for fixtures; unrelated to gen_er's
// skipping sampler.
inline Graph coin_flip_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline bool has_isolated_node(const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (g.degree(u) == 0) return true;
  return false;
}

// Coin-flip graph redrawn (seed advanced) until no node is isolated.
inline Graph coin_flip_graph_without_isolates(std::size_t n, double p, std::uint64_t seed) {
  for (;; ++seed) {
    Graph g = coin_flip_graph(n, p, seed);
    if (!has_isolated_node(g)) return g;
  }
}

}  // namespace groupobs::testing
