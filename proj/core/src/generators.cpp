#include "groupobs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>
#include <vector>

#include "groupobs/errors.hpp"

namespace groupobs {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::complete: return "complete";
    case Family::er: return "er";
    case Family::ba: return "ba";
    case Family::ws: return "ws";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  if (text == "complete") return Family::complete;
  if (text == "er") return Family::er;
  if (text == "ba") return Family::ba;
  if (text == "ws") return Family::ws;
  throw InputError("unknown graph family '" + std::string(text) +
                   "' (expected complete|er|ba|ws)");
}

Graph gen_complete(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("ER graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("ER edge probability must lie in [0, 1]");
  if (p == 1.0) return gen_complete(n);

  std::vector<Edge> edges;
  if (p > 0.0) {
    std::mt19937_64 rng(seed);
    std::geometric_distribution<std::uint64_t> skip(p);
    // Walk the lower triangle (v > w) row by row, jumping over the
    // geometrically distributed runs of absent pairs.
    std::uint64_t v = 1;
    std::uint64_t w = 0;
    bool first = true;
    while (v < n) {
      std::uint64_t gap = skip(rng);
      w += first ? gap : gap + 1;
      first = false;
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) edges.push_back(Edge{static_cast<NodeId>(w), static_cast<NodeId>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) throw InputError("BA graph needs 1 <= m < n");
  std::mt19937_64 rng(seed);

  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  // Each edge endpoint appears once, so a uniform pick from this list is a
  // degree-proportional pick.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * (n - m));

  std::vector<NodeId> targets;
  std::unordered_set<NodeId> chosen;
  for (std::size_t arriving = m; arriving < n; ++arriving) {
    chosen.clear();
    targets.clear();
    if (endpoints.empty()) {
      // All existing nodes have degree 0: attach uniformly among them.
      std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(arriving - 1));
      while (targets.size() < m) {
        const NodeId t = pick(rng);
        if (chosen.insert(t).second) targets.push_back(t);
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
      while (targets.size() < m) {
        const NodeId t = endpoints[pick(rng)];
        if (chosen.insert(t).second) targets.push_back(t);
      }
    }
    const auto u = static_cast<NodeId>(arriving);
    for (NodeId t : targets) {
      edges.push_back(make_edge(u, t));
      endpoints.push_back(u);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  const std::size_t ring = normalize_ring_degree(k);
  if (k < 2 || k >= n) throw InputError("WS graph needs 2 <= k < n");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("WS rewiring probability must lie in [0, 1]");

  std::vector<std::unordered_set<NodeId>> adj(n);
  auto link = [&](NodeId a, NodeId b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  auto unlink = [&](NodeId a, NodeId b) {
    adj[a].erase(b);
    adj[b].erase(a);
  };
  for (std::size_t j = 1; j <= ring / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      link(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n));
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  for (std::size_t j = 1; j <= ring / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto u = static_cast<NodeId>(i);
      const auto v = static_cast<NodeId>((i + j) % n);
      if (coin(rng) >= p) continue;
      if (!adj[u].contains(v)) continue;  // already rewired away
      if (adj[u].size() >= n - 1) continue;  // no free target
      NodeId w = node(rng);
      while (w == u || adj[u].contains(w)) w = node(rng);
      unlink(u, v);
      link(u, w);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n * ring / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.push_back(Edge{u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::complete: return gen_complete(spec.n);
    case Family::er: return gen_er(spec.n, spec.p, spec.seed);
    case Family::ba: return gen_ba(spec.n, spec.m, spec.seed);
    case Family::ws: return gen_ws(spec.n, spec.k, spec.p, spec.seed);
  }
  throw InputError("unknown graph family");
}

GeneratorSpec params_for_density(Family family, std::size_t n, double density,
                                 std::uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw InputError("target density must lie in (0, 1]");
  }
  if (n < 2) throw InputError("density matching needs n >= 2");
  GeneratorSpec spec;
  spec.family = family;
  spec.n = n;
  spec.seed = seed;
  const auto nn = static_cast<double>(n);
  switch (family) {
    case Family::complete:
      break;
    case Family::er:
      spec.p = density;
      break;
    case Family::ba: {
      // m(n - m) peaks at m = n/2, so BA cannot exceed about half density.
      const double half = std::floor(nn / 2.0);
      const double ceiling = 2.0 * half * (nn - half) / (nn * (nn - 1.0));
      if (density > ceiling) {
        throw InputError("density unreachable for BA: at most " + std::to_string(ceiling));
      }
      const auto m = static_cast<std::size_t>(std::llround(density * nn / 2.0));
      spec.m = std::max<std::size_t>(1, m);
      if (spec.m >= n) throw InputError("density unreachable for BA: m would reach n");
      break;
    }
    case Family::ws: {
      if (density < 2.0 / nn) {
        throw InputError("density unreachable for WS: below 2/n needs fewer than 2 ring neighbors");
      }
      const auto k = static_cast<std::size_t>(std::llround(density * (nn - 1.0) / 2.0)) * 2;
      spec.k = std::max<std::size_t>(2, k);
      if (spec.k >= n) throw InputError("density unreachable for WS: k would reach n");
      spec.p = kDefaultRewiring;
      break;
    }
  }
  return spec;
}

double expected_density(const GeneratorSpec& spec) {
  const auto n = static_cast<double>(spec.n);
  if (spec.n < 2) return 0.0;
  switch (spec.family) {
    case Family::complete: return 1.0;
    case Family::er: return spec.p;
    case Family::ba: {
      const auto m = static_cast<double>(spec.m);
      return 2.0 * m * (n - m) / (n * (n - 1.0));
    }
    case Family::ws:
      return static_cast<double>(normalize_ring_degree(spec.k)) / (n - 1.0);
  }
  return 0.0;
}

}  // namespace groupobs
