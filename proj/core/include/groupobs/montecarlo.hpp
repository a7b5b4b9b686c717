#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "groupobs/graph.hpp"
#include "groupobs/scope.hpp"

namespace groupobs {

struct McEstimate {
  double mean = 0.0;
  // Sample standard deviation / sqrt(trials); 0 for a single trial.
  double standard_error = 0.0;
  std::size_t trials = 0;
};

// SplitMix64 finalizer applied to the index-th element of the SplitMix64
// stream started at `seed`. Used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// Uniform size-nc subset of {0..n-1} via partial Fisher-Yates.
// Throws InputError when nc > n.
NodeSet sample_compromised(std::size_t n, std::size_t nc, std::uint64_t seed);

// Throws DomainError if the metric is undefined for (g, nc, scope):
// local scopes need nc < n, edge scopes need at least one edge.
void validate_metric_domain(const Graph& g, const ObservationScope& scope, std::size_t nc);

// Evaluates one realization of a metric for successive compromised sets.
// Holds the BFS workspace so repeated evaluation on a large graph does not
// reallocate. Not thread-safe; use one instance per worker.
class ObservationKernel {
 public:
  ObservationKernel(const Graph& g, ObservationScope scope);

  // `compromised` must be duplicate-free and in range.
  double evaluate(std::span<const NodeId> compromised);

 private:
  double node_metric(std::size_t nc) const;
  double global_edge_metric() const;
  double local_edge_metric() const;

  const Graph* graph_;
  ObservationScope scope_;
  BoundedBfs bfs_;
};

// One realization: global-edge |E_o^k|/|E|; global-node (nc+|V_o^k|)/n;
// local-edge mean over non-compromised nodes with degree > 0 of the
// observed share of their incident edges (0 if no such node);
// local-node |V_o^k|/(n-nc).
double realized_metric(const Graph& g, const NodeSet& compromised, const ObservationScope& scope);

// Mean and standard error of realized_metric over `trials` independent
// uniform draws. Trial t draws with seed mix_seed(seed, t); results are
// gathered by trial index, so the estimate is bit-identical for any
// `workers`.
McEstimate mc_estimate(const Graph& g, const ObservationScope& scope, std::size_t nc,
                       std::size_t trials, std::uint64_t seed, unsigned workers = 1);

inline constexpr std::uint64_t kBruteForceBudget = 1'000'000;

// Exact expectation of realized_metric over every size-nc subset,
// enumerated lexicographically. Throws ResourceError when C(n, nc)
// exceeds `budget`.
double brute_force_metric(const Graph& g, const ObservationScope& scope, std::size_t nc,
                          std::uint64_t budget = kBruteForceBudget);

}  // namespace groupobs
