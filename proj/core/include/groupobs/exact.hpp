#pragma once

#include <cstddef>

#include "groupobs/graph.hpp"

// Closed-form 1-hop observability under a uniformly random compromised
// subset of fixed size. All functions are pure.
namespace groupobs {

// C(n-1-d, nc) / C(n-1, nc): probability that none of a non-compromised
// node's d neighbors is compromised. Evaluated as a telescoping product so
// that large n cannot overflow. Zero when d > n-1-nc.
double survival_ratio(std::size_t n, std::size_t nc, std::size_t d);

// 1 - ((n-nc)/n) * ((n-1-nc)/(n-1)); independent of the edge structure.
double exact_global_edge_obs(std::size_t n, std::size_t nc);

// nc / (n-1). Throws DomainError at nc == n.
double exact_local_edge_obs(std::size_t n, std::size_t nc);

// P[u observed | u not compromised].
double exact_node_obs_prob(const Graph& g, NodeId u, std::size_t nc);

/// Mean of exact_node_obs_prob over all nodes. Depends on the graph only
/// through its degree sequence, so the sum runs over distinct degrees in
/// ascending order (identical degree multisets give bit-identical results).
/// Throws DomainError at nc == n.
double exact_local_node_obs(const Graph& g, std::size_t nc);

// nc/n + ((n-nc)/n) * exact_local_node_obs(g, nc); 1 at nc == n.
double exact_global_node_obs(const Graph& g, std::size_t nc);

}  // namespace groupobs
