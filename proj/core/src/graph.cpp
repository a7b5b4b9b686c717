#include "groupobs/graph.hpp"

#include <algorithm>
#include <string>

#include "groupobs/errors.hpp"
#include "internal.hpp"

namespace groupobs {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NodeSet::contains(NodeId u) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), u);
}

EdgeSet::EdgeSet(std::vector<Edge> members) : members_(std::move(members)) {
  for (auto& e : members_) e = make_edge(e.u, e.v);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool EdgeSet::contains(Edge e) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), make_edge(e.u, e.v));
}

Graph Graph::from_edge_list(std::size_t n,
                            std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(Edge{a, b});
  return from_edges(n, edges);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> input) {
  if (n > static_cast<std::size_t>(kUnreached)) {
    throw InputError("node count " + std::to_string(n) + " exceeds the 32-bit id range");
  }
  Graph g;
  g.node_count_ = n;
  g.edges_.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw InputError("self-loop on node " + std::to_string(e.u));
    }
    g.edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each adjacency row fills in ascending order
  // for the v side; the u side is sorted afterwards.
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
  }
  return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const noexcept {
  if (a >= node_count_ || b >= node_count_) return false;
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

double density(const Graph& g) {
  const auto n = static_cast<double>(g.node_count());
  if (g.node_count() < 2) {
    throw DomainError("density is undefined for fewer than 2 nodes");
  }
  return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

double avg_clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InputError("clustering is undefined on an empty graph");

  std::vector<char> mark(n, 0);
  double total = 0.0;
  for (NodeId u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const std::size_t d = nbrs.size();
    if (d < 2) continue;
    for (NodeId v : nbrs) mark[v] = 1;
    std::size_t links = 0;
    for (NodeId v : nbrs) {
      for (NodeId w : g.neighbors(v)) {
        if (w > v && mark[w]) ++links;
      }
    }
    for (NodeId v : nbrs) mark[v] = 0;
    total += 2.0 * static_cast<double>(links) /
             (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return total / static_cast<double>(n);
}

BoundedBfs::BoundedBfs(const Graph& g) : graph_(&g), dist_(g.node_count(), kUnreached) {
  visited_.reserve(g.node_count());
}

void BoundedBfs::run(std::span<const NodeId> sources, std::uint32_t max_depth) {
  for (NodeId u : visited_) dist_[u] = kUnreached;
  visited_.clear();

  for (NodeId s : sources) {
    if (dist_[s] == kUnreached) {
      dist_[s] = 0;
      visited_.push_back(s);
    }
  }
  // visited_ doubles as the FIFO queue: nodes are appended in
  // non-decreasing distance order.
  for (std::size_t head = 0; head < visited_.size(); ++head) {
    const NodeId u = visited_[head];
    const std::uint32_t next = dist_[u] + 1;
    if (next > max_depth) break;
    for (NodeId v : graph_->neighbors(u)) {
      if (dist_[v] == kUnreached) {
        dist_[v] = next;
        visited_.push_back(v);
      }
    }
  }
}

NodeSet khop_nodes(const Graph& g, const NodeSet& sources, std::uint32_t hops) {
  detail::require_subset(g, sources);
  if (hops == 0) return {};
  BoundedBfs bfs(g);
  bfs.run(sources.members(), hops);
  std::vector<NodeId> out;
  for (NodeId u : bfs.reached()) {
    if (bfs.distance(u) > 0) out.push_back(u);
  }
  return NodeSet(std::move(out));
}

EdgeSet observed_edges(const Graph& g, const NodeSet& compromised, std::uint32_t hops) {
  if (hops < 1) throw InputError("observed edges need hops >= 1");
  detail::require_subset(g, compromised);
  BoundedBfs bfs(g);
  bfs.run(compromised.members(), hops - 1);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (bfs.distance(e.u) != kUnreached || bfs.distance(e.v) != kUnreached) {
      out.push_back(e);
    }
  }
  return EdgeSet(std::move(out));
}

}  // namespace groupobs
