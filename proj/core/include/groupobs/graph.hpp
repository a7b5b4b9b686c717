#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace groupobs {

using NodeId = std::uint32_t;

// Unordered node pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes an unordered pair so that u < v.
constexpr Edge make_edge(NodeId a, NodeId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Sorted, duplicate-free set of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<NodeId> members);

  [[nodiscard]] std::span<const NodeId> members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] bool contains(NodeId u) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

// Sorted, duplicate-free set of normalized edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> members);

  [[nodiscard]] std::span<const Edge> members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] bool contains(Edge e) const noexcept;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> members_;
};

// Immutable undirected simple graph over dense ids 0..n-1, stored as CSR
// adjacency (neighbors sorted ascending) plus the sorted edge list.
class Graph {
 public:
  Graph() = default;

  // Duplicates (in either orientation) are collapsed. Throws InputError on
  // out-of-range endpoints or self-loops.
  static Graph from_edge_list(std::size_t n,
                              std::span<const std::pair<NodeId, NodeId>> pairs);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t node_count() const noexcept { return node_count_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  [[nodiscard]] std::size_t degree(NodeId u) const noexcept {
    return offsets_[u + 1] - offsets_[u];
  }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] bool has_edge(NodeId a, NodeId b) const noexcept;

 private:
  std::size_t node_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<Edge> edges_;
};

// 2|E| / (n(n-1)). Throws DomainError when n < 2.
double density(const Graph& g);

// Mean local clustering coefficient; degree < 2 contributes 0.
// Throws InputError on the empty graph.
double avg_clustering(const Graph& g);

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Reusable multi-source breadth-first search with a depth cap. Distances
// beyond the cap stay kUnreached, so one instance can be reused across
// many source sets without reallocating on large graphs.
class BoundedBfs {
 public:
  explicit BoundedBfs(const Graph& g);

  // Computes hop distances from `sources` up to `max_depth`.
  void run(std::span<const NodeId> sources, std::uint32_t max_depth);

  [[nodiscard]] std::uint32_t distance(NodeId u) const noexcept { return dist_[u]; }
  [[nodiscard]] std::span<const std::uint32_t> distances() const noexcept { return dist_; }
  // Nodes touched by the last run, in visit order.
  [[nodiscard]] std::span<const NodeId> reached() const noexcept { return visited_; }

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> dist_;
  std::vector<NodeId> visited_;
};

// Non-source nodes within `hops` of any source. hops = 0 yields the empty set.
NodeSet khop_nodes(const Graph& g, const NodeSet& sources, std::uint32_t hops);

// Edges with an endpoint within hops-1 of a compromised node.
// Throws InputError when hops < 1.
EdgeSet observed_edges(const Graph& g, const NodeSet& compromised, std::uint32_t hops);

// Plain-text edge list: one "u v" pair per line, '#' comments and blank
// lines ignored. A "# nodes N" comment fixes the node count so isolated
// trailing nodes survive a round trip; otherwise n = max id + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace groupobs
