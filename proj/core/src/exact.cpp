#include "groupobs/exact.hpp"

#include <map>
#include <string>

#include "groupobs/errors.hpp"

namespace groupobs {
namespace {

void require_nodes(std::size_t n) {
  if (n < 2) throw InputError("closed forms need n >= 2, got n = " + std::to_string(n));
}

void require_count(std::size_t n, std::size_t nc) {
  if (nc > n) {
    throw InputError("compromised count " + std::to_string(nc) + " exceeds n = " +
                     std::to_string(n));
  }
}

void require_local(std::size_t n, std::size_t nc) {
  require_count(n, nc);
  if (nc == n) {
    throw DomainError("local observability is undefined when every node is compromised");
  }
}

}  // namespace

double survival_ratio(std::size_t n, std::size_t nc, std::size_t d) {
  if (n == 0 || nc > n - 1 || d > n - 1) {
    throw InputError("survival_ratio needs nc <= n-1 and d <= n-1 (n=" + std::to_string(n) +
                     ", nc=" + std::to_string(nc) + ", d=" + std::to_string(d) + ")");
  }
  if (d > n - 1 - nc) return 0.0;
  double ratio = 1.0;
  const auto top = static_cast<double>(n - 1 - d);
  const auto bottom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < nc && ratio > 0.0; ++i) {
    const auto k = static_cast<double>(i);
    ratio *= (top - k) / (bottom - k);
  }
  return ratio;
}

double exact_global_edge_obs(std::size_t n, std::size_t nc) {
  require_nodes(n);
  require_count(n, nc);
  const auto nn = static_cast<double>(n);
  const auto c = static_cast<double>(nc);
  return 1.0 - ((nn - c) / nn) * ((nn - 1.0 - c) / (nn - 1.0));
}

double exact_local_edge_obs(std::size_t n, std::size_t nc) {
  require_nodes(n);
  require_local(n, nc);
  return static_cast<double>(nc) / static_cast<double>(n - 1);
}

double exact_node_obs_prob(const Graph& g, NodeId u, std::size_t nc) {
  const std::size_t n = g.node_count();
  if (u >= n) throw InputError("node " + std::to_string(u) + " is not in the graph");
  require_local(n, nc);
  return 1.0 - survival_ratio(n, nc, g.degree(u));
}

double exact_local_node_obs(const Graph& g, std::size_t nc) {
  const std::size_t n = g.node_count();
  require_nodes(n);
  require_local(n, nc);
  if (nc == 0) return 0.0;

  std::map<std::size_t, std::size_t> histogram;
  for (NodeId u = 0; u < n; ++u) ++histogram[g.degree(u)];

  double sum = 0.0;
  for (const auto& [deg, count] : histogram) {
    sum += static_cast<double>(count) * (1.0 - survival_ratio(n, nc, deg));
  }
  return sum / static_cast<double>(n);
}

double exact_global_node_obs(const Graph& g, std::size_t nc) {
  const std::size_t n = g.node_count();
  require_nodes(n);
  require_count(n, nc);
  if (nc == n) return 1.0;
  const auto nn = static_cast<double>(n);
  const auto c = static_cast<double>(nc);
  return c / nn + ((nn - c) / nn) * exact_local_node_obs(g, nc);
}

}  // namespace groupobs
