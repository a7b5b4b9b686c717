#include "groupobs/montecarlo.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "groupobs/errors.hpp"
#include "groupobs/parallel.hpp"
#include "internal.hpp"

namespace groupobs {
namespace {

// Partial Fisher-Yates over a reusable identity permutation. The swaps are
// undone after each draw, so every draw starts from the identity and the
// result depends only on the seed.
class SubsetSampler {
 public:
  explicit SubsetSampler(std::size_t n) : perm_(n) {
    std::iota(perm_.begin(), perm_.end(), NodeId{0});
  }

  std::span<const NodeId> draw(std::size_t nc, std::uint64_t seed) {
    restore();
    std::mt19937_64 rng(seed);
    const std::size_t n = perm_.size();
    for (std::size_t i = 0; i < nc; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      const std::size_t j = pick(rng);
      std::swap(perm_[i], perm_[j]);
      swaps_.push_back(j);
    }
    return {perm_.data(), nc};
  }

 private:
  void restore() {
    for (std::size_t i = swaps_.size(); i-- > 0;) std::swap(perm_[i], perm_[swaps_[i]]);
    swaps_.clear();
  }

  std::vector<NodeId> perm_;
  std::vector<std::size_t> swaps_;
};

std::uint32_t bfs_depth(const ObservationScope& scope) {
  return scope.target() == Target::node ? scope.hops() : scope.hops() - 1;
}

// C(n, k), or budget + 1 once the value exceeds budget.
std::uint64_t capped_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t budget) {
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > budget) return budget + 1;
  }
  return c;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NodeSet sample_compromised(std::size_t n, std::size_t nc, std::uint64_t seed) {
  if (nc > n) {
    throw InputError("cannot compromise " + std::to_string(nc) + " of " + std::to_string(n) +
                     " nodes");
  }
  SubsetSampler sampler(n);
  auto picked = sampler.draw(nc, seed);
  return NodeSet(std::vector<NodeId>(picked.begin(), picked.end()));
}

void validate_metric_domain(const Graph& g, const ObservationScope& scope, std::size_t nc) {
  const std::size_t n = g.node_count();
  if (nc > n) {
    throw InputError("compromised count " + std::to_string(nc) + " exceeds n = " +
                     std::to_string(n));
  }
  if (scope.is_local() && nc == n) {
    throw DomainError("local observability is undefined when every node is compromised");
  }
  if (scope.target() == Target::edge && g.edge_count() == 0) {
    throw DomainError("edge observability is undefined on a graph without edges");
  }
  if (scope.target() == Target::node && n == 0) {
    throw DomainError("node observability is undefined on an empty graph");
  }
}

ObservationKernel::ObservationKernel(const Graph& g, ObservationScope scope)
    : graph_(&g), scope_(scope), bfs_(g) {}

double ObservationKernel::evaluate(std::span<const NodeId> compromised) {
  bfs_.run(compromised, bfs_depth(scope_));
  const std::size_t nc = compromised.size();
  if (scope_.target() == Target::node) return node_metric(nc);
  if (scope_.is_local()) return local_edge_metric();
  return global_edge_metric();
}

double ObservationKernel::node_metric(std::size_t nc) const {
  const std::size_t observed = bfs_.reached().size() - nc;
  const std::size_t n = graph_->node_count();
  if (scope_.is_local()) {
    return static_cast<double>(observed) / static_cast<double>(n - nc);
  }
  return static_cast<double>(nc + observed) / static_cast<double>(n);
}

double ObservationKernel::global_edge_metric() const {
  // Reached nodes are exactly those within hops-1 of a compromised node.
  std::size_t observed = 0;
  for (const Edge& e : graph_->edges()) {
    if (bfs_.distance(e.u) != kUnreached || bfs_.distance(e.v) != kUnreached) ++observed;
  }
  return static_cast<double>(observed) / static_cast<double>(graph_->edge_count());
}

double ObservationKernel::local_edge_metric() const {
  const std::size_t n = graph_->node_count();
  double sum = 0.0;
  std::size_t eligible = 0;
  for (NodeId u = 0; u < n; ++u) {
    const std::uint32_t du = bfs_.distance(u);
    if (du == 0) continue;
    const auto nbrs = graph_->neighbors(u);
    if (nbrs.empty()) continue;
    ++eligible;
    if (du != kUnreached) {
      sum += 1.0;
      continue;
    }
    std::size_t seen = 0;
    for (NodeId v : nbrs) {
      if (bfs_.distance(v) != kUnreached) ++seen;
    }
    sum += static_cast<double>(seen) / static_cast<double>(nbrs.size());
  }
  return eligible == 0 ? 0.0 : sum / static_cast<double>(eligible);
}

double realized_metric(const Graph& g, const NodeSet& compromised, const ObservationScope& scope) {
  detail::require_subset(g, compromised);
  validate_metric_domain(g, scope, compromised.size());
  ObservationKernel kernel(g, scope);
  return kernel.evaluate(compromised.members());
}

McEstimate mc_estimate(const Graph& g, const ObservationScope& scope, std::size_t nc,
                       std::size_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw InputError("Monte-Carlo estimation needs at least one trial");
  validate_metric_domain(g, scope, nc);

  std::vector<double> samples(trials);
  parallel_for(trials, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    ObservationKernel kernel(g, scope);
    SubsetSampler sampler(g.node_count());
    for (std::size_t t = begin; t < end; ++t) {
      samples[t] = kernel.evaluate(sampler.draw(nc, mix_seed(seed, t)));
    }
  });

  McEstimate est;
  est.trials = trials;
  double sum = 0.0;
  for (double s : samples) sum += s;
  est.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - est.mean) * (s - est.mean);
    const double variance = ss / static_cast<double>(trials - 1);
    est.standard_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

double brute_force_metric(const Graph& g, const ObservationScope& scope, std::size_t nc,
                          std::uint64_t budget) {
  validate_metric_domain(g, scope, nc);
  const std::size_t n = g.node_count();
  const std::uint64_t total = capped_binomial(n, nc, budget);
  if (total > budget) {
    throw ResourceError("C(" + std::to_string(n) + ", " + std::to_string(nc) +
                        ") subsets exceed the enumeration budget of " + std::to_string(budget));
  }

  ObservationKernel kernel(g, scope);
  std::vector<NodeId> subset(nc);
  std::iota(subset.begin(), subset.end(), NodeId{0});
  double sum = 0.0;
  std::uint64_t count = 0;
  while (true) {
    sum += kernel.evaluate(subset);
    ++count;
    // Advance to the next combination in lexicographic order.
    std::size_t i = nc;
    while (i > 0 && subset[i - 1] == n - nc + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < nc; ++j) subset[j] = subset[j - 1] + 1;
  }
  return sum / static_cast<double>(count);
}

}  // namespace groupobs
